#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bmcts/schedule.hpp"

namespace bmcts {

enum class Algorithm { uct, ments, bts, dents, ar_bts, ar_dents, ar_ments };

enum class RecommendRule { value_argmax, most_visited };

enum class BackupMode { naive, fast };

std::string algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(const std::string& name);

/// Full configuration of one search algorithm.
///
/// `alpha` is the Boltzmann search temperature. The AR variants replace it
/// with `alpha_schedule` evaluated at the node visit count. `beta` weights
/// entropy values in DENTS-family policies; the default decays as
/// beta_init / log(e + m). Policies and schedules are evaluated at the
/// pre-increment visit count of the node being sampled.
struct AlgorithmConfig {
    Algorithm algorithm = Algorithm::bts;

    double epsilon = 1.0;   // uniform-mixture exploration coefficient, > 0
    double alpha = 1.0;     // search temperature, > 0 (ignored by UCT)
    double uct_c = 1.0;     // UCB exploration bias, >= 0

    Schedule alpha_schedule = Schedule::inverse_sqrt(1.0);  // AR temperature
    Schedule beta = Schedule::inverse_log(1.0);             // entropy weight

    RecommendRule recommend_rule = RecommendRule::value_argmax;
    BackupMode backup = BackupMode::fast;
    bool use_alias = true;
    int alias_rebuild_every = 0;  // 0: rebuild every |A| visits

    double v_init = 0.0;
    double q_init = 0.0;
    bool rollout_init = false;  // initialize leaf values with a uniform rollout

    bool uses_entropy() const {
        return algorithm == Algorithm::dents || algorithm == Algorithm::ar_dents ||
               algorithm == Algorithm::ar_ments;
    }
    bool uses_soft_values() const { return algorithm == Algorithm::ments; }
    bool uses_bellman_values() const {
        return algorithm == Algorithm::bts || algorithm == Algorithm::dents;
    }
    bool uses_average_returns() const {
        return algorithm == Algorithm::uct || algorithm == Algorithm::ar_bts ||
               algorithm == Algorithm::ar_dents || algorithm == Algorithm::ar_ments;
    }
    bool is_ar() const {
        return algorithm == Algorithm::ar_bts || algorithm == Algorithm::ar_dents ||
               algorithm == Algorithm::ar_ments;
    }

    /// Search temperature at a node visited m times.
    double temperature(std::int64_t m) const {
        return is_ar() ? alpha_schedule(m) : alpha;
    }

    /// Entropy weight at a node visited m times (zero for algorithms that do
    /// not track entropy).
    double entropy_weight(std::int64_t m) const {
        if (!uses_entropy()) return 0.0;
        if (algorithm == Algorithm::ar_ments) return alpha_schedule(m);
        return beta(m);
    }

    /// Throws std::invalid_argument on a hard violation; returns non-fatal
    /// warnings (e.g. an AR variant configured with a non-decaying
    /// temperature, which forfeits the consistency guarantee).
    std::vector<std::string> validate() const;
};

}  // namespace bmcts
