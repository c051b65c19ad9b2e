#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "bmcts/config.hpp"
#include "bmcts/mdp.hpp"
#include "bmcts/node.hpp"
#include "bmcts/random.hpp"

namespace bmcts {

struct TrialStep {
    SearchNode* node;
    int action;
    double reward;
};

/// One trial: the in-tree prefix with per-step rewards, plus the leaf it
/// ended at and the tail value that leaf contributed to the trial return.
struct Trajectory {
    std::vector<TrialStep> steps;
    SearchNode* leaf = nullptr;
    double leaf_value = 0.0;
    bool expanded = false;  // false when the trial ended at the horizon or a terminal revisit
};

/// Single-threaded MCTS engine over one MDP. Each trial selects actions with
/// the configured search policy, samples successors from the model, expands
/// at most one new node, and backs the trial up with the configured rule.
/// Independent replications should use separate trees with separate seeds.
class SearchTree {
public:
    SearchTree(const MdpModel& mdp, AlgorithmConfig cfg, RandomStream rng);

    /// Runs one trial and returns its trajectory (pointers stay valid until
    /// the tree is destroyed).
    Trajectory run_trial();

    void run_trials(std::int64_t n) {
        for (std::int64_t i = 0; i < n; ++i) run_trial();
    }

    const SearchNode& root() const { return *root_; }
    SearchNode& root() { return *root_; }
    const MdpModel& mdp() const { return *mdp_; }
    const AlgorithmConfig& config() const { return cfg_; }

    /// Recommended action at the root.
    int recommend_root() const;

    /// Follows (action, successor) links from the root; nullptr once the path
    /// leaves the tree.
    const SearchNode* descend(std::span<const std::pair<int, StateId>> path) const;

    /// recommend at the node reached by `path`; throws std::out_of_range if
    /// the path leaves the tree.
    int recommend_at(std::span<const std::pair<int, StateId>> path) const;

    /// Creates the child node for (parent, action) -> state at depth
    /// parent.depth + 1, initialized from the configured value initializers
    /// (terminal states pin every table to 0). Throws std::logic_error if the
    /// child already exists.
    SearchNode& expand(SearchNode& parent, int action, StateId state);

    std::int64_t trials_run() const { return trials_; }
    std::int64_t node_count() const { return nodes_; }

private:
    std::unique_ptr<SearchNode> make_node(StateId state, int depth);
    int select_action(SearchNode& node);
    void backup(Trajectory& traj);
    double rollout_value(StateId state, int depth);

    const MdpModel* mdp_;
    AlgorithmConfig cfg_;
    RandomStream rng_;
    std::unique_ptr<SearchNode> root_;
    std::int64_t trials_ = 0;
    std::int64_t nodes_ = 0;
};

}  // namespace bmcts
