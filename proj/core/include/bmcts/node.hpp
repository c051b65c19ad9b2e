#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "bmcts/alias.hpp"
#include "bmcts/heap.hpp"
#include "bmcts/mdp.hpp"

namespace bmcts {

struct SearchNode;

struct ChildEntry {
    StateId state;
    std::unique_ptr<SearchNode> node;
};

/// Per-(node, action) statistics. Children are keyed by successor state; the
/// vector stays tiny because successor sets are small.
struct ActionStats {
    std::int64_t count = 0;  // N(s,a)
    double q_bellman = 0.0;  // dynamic-programming estimate
    double q_soft = 0.0;     // log-sum-exp (soft) estimate
    double q_avg = 0.0;      // running average return
    double h_q = 0.0;        // entropy value
    std::vector<ChildEntry> children;

    SearchNode* child(StateId s) const {
        for (const auto& entry : children)
            if (entry.state == s) return entry.node.get();
        return nullptr;
    }
};

/// One node of the search tree. Nodes are keyed by the trajectory that leads
/// to them, so a node has exactly one parent even when states repeat.
///
/// Visit counts are raised during the backup phase: a node's count therefore
/// reflects completed trials, and policies evaluated at selection time see
/// the pre-increment count. Expanded nodes start at 1 (their creation visit),
/// so N(s) = sum_a N(s,a) + 1 for every expandable non-root node; the root
/// starts at 0 and counts exactly the number of trials run.
struct SearchNode {
    StateId state = 0;
    int depth = 0;
    double sign = 1.0;  // +1 maximizer, -1 minimizer
    std::int64_t visits = 0;

    double init_value = 0.0;  // tail value this leaf contributed when created

    double v_bellman = 0.0;
    double v_soft = 0.0;
    double v_avg = 0.0;
    double h_v = 0.0;

    // Values as of this node's previous update, consumed by the parent's
    // incremental backups.
    double v_bellman_prev = 0.0;
    double v_soft_prev = 0.0;
    double h_v_prev = 0.0;

    // Stable-softmax auxiliaries for the soft value, kept in the signed
    // domain g = sign * q_soft:
    //   soft_max = max_a g(a),  soft_expsum = sum_a exp((g(a) - soft_max) / alpha).
    double soft_max = 0.0;
    double soft_expsum = 0.0;

    std::vector<ActionStats> actions;

    IndexedMaxHeap bellman_heap;  // keys sign * q_bellman
    IndexedMaxHeap soft_heap;     // keys sign * q_soft

    // Sampling cache: the policy frozen at the last alias rebuild.
    AliasTable alias_table;
    std::vector<double> sampling_policy;

    // Policy snapshot used by the O(1) entropy-value delta between rebuild
    // ticks; refreshed from live values whenever the cached policy changes.
    std::vector<double> entropy_policy;

    int num_actions() const { return static_cast<int>(actions.size()); }
    bool terminal() const { return actions.empty(); }
};

}  // namespace bmcts
