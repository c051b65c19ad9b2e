#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bmcts/policies.hpp"
#include "bmcts/search.hpp"

namespace bmcts {

/// The total policy induced by a search tree: the algorithm's recommendation
/// at tree nodes, uniform over actions everywhere else. A walker tracks the
/// tree position along the episode being played; once the episode leaves the
/// tree it stays uniform. Evaluation never mutates the tree.
class CompletedPolicy {
public:
    explicit CompletedPolicy(const SearchTree& tree)
        : tree_(&tree), cursor_(&tree.root()) {}

    void reset() { cursor_ = &tree_->root(); }

    /// Action for the current state; `num_actions` is the environment's
    /// action count there.
    int act(int num_actions, RandomStream& rng) const {
        if (in_tree()) return recommend_action(*cursor_, tree_->config());
        return static_cast<int>(rng.uniform_index(num_actions));
    }

    /// Probability vector over actions at the current position.
    std::vector<double> distribution(int num_actions) const {
        std::vector<double> d(num_actions, 0.0);
        if (in_tree()) {
            d[recommend_action(*cursor_, tree_->config())] = 1.0;
        } else {
            for (double& p : d) p = 1.0 / num_actions;
        }
        return d;
    }

    /// Moves the walker along the executed (action, successor) edge.
    void advance(int action, StateId next) {
        if (cursor_ == nullptr) return;
        if (cursor_->terminal() || action >= cursor_->num_actions()) {
            cursor_ = nullptr;
            return;
        }
        cursor_ = cursor_->actions[action].child(next);
    }

    bool in_tree() const { return cursor_ != nullptr && !cursor_->terminal(); }

private:
    const SearchTree* tree_;
    const SearchNode* cursor_;
};

/// Builds the total evaluation policy for a tree.
inline CompletedPolicy complete_policy(const SearchTree& tree) { return CompletedPolicy(tree); }

struct PolicyEstimate {
    double mean = 0.0;
    double std_err = 0.0;
};

/// Monte-Carlo estimate of the policy value from the initial state over
/// `n_traj` episodes. Throws std::invalid_argument for n_traj < 1.
PolicyEstimate evaluate_policy(CompletedPolicy policy, const MdpModel& mdp, std::int64_t n_traj,
                               RandomStream& rng);

struct SimpleRegret {
    double raw;      // may be negative from Monte-Carlo noise
    double clamped;  // max(raw, 0)
};

/// oracle_value - estimate. The raw value is reported as-is; negative raw
/// regret is evaluation noise and a useful sanity signal.
SimpleRegret simple_regret(double estimate, double oracle_value);

struct Checkpoint {
    std::int64_t n_trials;
    double est_value;
    double std_err;
    double regret_raw;
    double regret_clamped;
    std::int64_t wallclock_ns;   // cumulative search time, evaluation excluded
    double trials_per_sec;
};

struct EvalReport {
    std::string algorithm;
    std::string env;
    std::uint64_t seed;
    std::int64_t eval_trajectories;
    double oracle_value;
    std::vector<Checkpoint> checkpoints;
};

/// Interleaves search with periodic evaluation: every `checkpoint_every`
/// trials the tree's completed policy is evaluated over `eval_trajectories`
/// episodes and compared with the exact optimal value. The search and
/// evaluation random streams are split independently from `seed`, so
/// checkpointing does not perturb the search trajectory sequence.
EvalReport run_learning_curve(const MdpModel& mdp, const AlgorithmConfig& cfg,
                              std::int64_t n_total, std::int64_t checkpoint_every,
                              std::int64_t eval_trajectories, std::uint64_t seed);

}  // namespace bmcts
