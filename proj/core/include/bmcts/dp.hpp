#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "bmcts/mdp.hpp"

namespace bmcts {

enum class ValueFlavor { standard, soft, minimax };

/// Exact dynamic-programming value tables keyed by (state, timestep), where
/// the timestep counts actions taken so far. Values at or beyond the horizon
/// are zero. Only states reachable from the initial state are tabulated.
class ValueTables {
public:
    ValueTables(ValueFlavor flavor, int horizon, double alpha = 0.0)
        : flavor_(flavor), alpha_(alpha), horizon_(horizon) {}

    ValueFlavor flavor() const { return flavor_; }
    double alpha() const { return alpha_; }
    int horizon() const { return horizon_; }

    /// V(s, t). Returns 0 for t >= horizon; throws std::out_of_range for an
    /// unreachable (s, t) before the horizon.
    double value(StateId s, int t) const;

    /// Q(s, ., t) for all actions. Empty for terminal states.
    std::span<const double> q_values(StateId s, int t) const;

    bool contains(StateId s, int t) const { return entries_.count(key(s, t)) != 0; }

    struct Entry {
        StateId state;
        int t;
        double v;
        std::vector<double> q;
    };

    /// All tabulated entries in an unspecified order.
    const std::vector<Entry>& entries() const { return entries_flat_; }

    void insert(StateId s, int t, double v, std::vector<double> q);

private:
    static std::uint64_t key(StateId s, int t);

    ValueFlavor flavor_;
    double alpha_;
    int horizon_;
    std::unordered_map<std::uint64_t, std::size_t> entries_;
    std::vector<Entry> entries_flat_;
};

/// Backward induction for the standard (reward-maximizing) optimal values.
ValueTables value_iterate(const MdpModel& mdp);

/// Backward induction for the maximum-entropy optimal values at temperature
/// `alpha`: the max over actions is replaced by alpha * logsumexp(Q/alpha),
/// computed with a max shift. Throws std::invalid_argument if alpha <= 0.
ValueTables soft_value_iterate(const MdpModel& mdp, double alpha);

/// Backward induction for two-player games: max over actions at maximizer
/// states, min at minimizer states.
ValueTables minimax_solve(const MdpModel& game);

/// Minimum nonzero gap between Q-values of distinct actions at any tabulated
/// (state, timestep). Returns +infinity when every state's Q-values are all
/// equal. Useful as a temperature budget: below gap/(3*H*log|A|) the soft and
/// standard argmax agree.
double delta_gap(const ValueTables& tables);

/// States reachable after exactly t actions, for t = 0..horizon.
std::vector<std::vector<StateId>> reachable_layers(const MdpModel& mdp);

}  // namespace bmcts
