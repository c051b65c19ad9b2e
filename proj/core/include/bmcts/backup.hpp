#pragma once

#include "bmcts/config.hpp"
#include "bmcts/node.hpp"

namespace bmcts {

/// Backup rules applied at one trajectory step (node, action) whose traversed
/// child this trial is `child`. All counts along the trajectory must already
/// be incremented. The fast variants produce the same values as the naive
/// ones (up to round-off) at O(log A) or O(1) per node instead of O(A).

/// Q(s,a) <- R + sum_{s'} (N(s')/N(s,a)) V(s'), V(s) <- max_a Q(s,a)
/// (min at minimizer nodes), recomputed from all children and actions.
void bellman_backup_naive(SearchNode& node, int action, double reward);

/// Same update via the exact incremental form: only the traversed child's
/// contribution changed, so the weighted sum is patched in O(1) using the
/// child's previous value, and the extreme is read from the heap.
void bellman_backup_fast(SearchNode& node, int action, const SearchNode& child, double reward);

/// Soft backup: Q_sft like the Bellman Q but over child soft values, then
/// V_sft <- alpha*logsumexp(Q_sft/alpha) over all actions (negated alpha at
/// minimizer nodes), recomputed with a max shift.
void soft_backup_naive(SearchNode& node, int action, double reward, double alpha);

/// Soft backup maintaining the running max M and shifted exponential sum E so
/// that V_sft = sign*(alpha*log E + M) without a full sweep.
void soft_backup_fast(SearchNode& node, int action, const SearchNode& child, double reward,
                      double alpha);

/// Entropy backup: H_Q(s,a) <- visit-weighted child H_V, then
/// H_V(s) <- sign*H(pi) + sum_a pi(a) H_Q(s,a) with pi the current search
/// policy. In fast mode the policy is recomputed only on rebuild ticks
/// (every cadence-th visit); between ticks the cached policy snapshot feeds
/// an O(1) delta.
void entropy_backup_naive(SearchNode& node, int action, const AlgorithmConfig& cfg);
void entropy_backup_fast(SearchNode& node, int action, const SearchNode& child,
                         const AlgorithmConfig& cfg);

/// Running-mean update of Q(s,a) and V(s) with the return collected from this
/// step onwards. Used by UCT and the average-return variants.
void average_return_update(SearchNode& node, int action, double trial_return);

/// Recomputation oracles: the value each table would take under the naive
/// rule given the node's current children, without mutating anything. Used to
/// verify that the fast paths track the naive definitions.
double recompute_q_bellman(const SearchNode& node, int action, double reward);
double recompute_v_bellman(const SearchNode& node);
double recompute_q_soft(const SearchNode& node, int action, double reward);
double recompute_v_soft(const SearchNode& node, double alpha);
double recompute_h_q(const SearchNode& node, int action);
double recompute_h_v(const SearchNode& node, std::span<const double> policy);

}  // namespace bmcts
