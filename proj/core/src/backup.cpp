#include "bmcts/backup.hpp"

#include <cmath>

#include "bmcts/policies.hpp"

namespace bmcts {

namespace {

// Patches the unnormalized visit-weighted child sum behind `q = base + sum/N`
// after the traversed child moved from (count-1, prev) to (count, current).
double incremental_weighted(double q_old, double base, std::int64_t edge_count,
                            std::int64_t child_count, double child_prev, double child_now) {
    if (edge_count == 1) return base + child_now;
    double unnorm = (q_old - base) * static_cast<double>(edge_count - 1);
    unnorm -= static_cast<double>(child_count - 1) * child_prev;
    unnorm += static_cast<double>(child_count) * child_now;
    return base + unnorm / static_cast<double>(edge_count);
}

int entropy_tick_cadence(const SearchNode& node, const AlgorithmConfig& cfg) {
    if (!cfg.use_alias) return 1;  // the live policy is sampled every visit
    return cfg.alias_rebuild_every > 0 ? cfg.alias_rebuild_every : node.num_actions();
}

}  // namespace

double recompute_q_bellman(const SearchNode& node, int action, double reward) {
    const ActionStats& as = node.actions[action];
    double acc = 0.0;
    for (const ChildEntry& e : as.children)
        acc += static_cast<double>(e.node->visits) * e.node->v_bellman;
    return reward + acc / static_cast<double>(as.count);
}

double recompute_v_bellman(const SearchNode& node) {
    double best = -std::numeric_limits<double>::infinity();
    for (const ActionStats& as : node.actions) best = std::max(best, node.sign * as.q_bellman);
    return node.sign * best;
}

double recompute_q_soft(const SearchNode& node, int action, double reward) {
    const ActionStats& as = node.actions[action];
    double acc = 0.0;
    for (const ChildEntry& e : as.children)
        acc += static_cast<double>(e.node->visits) * e.node->v_soft;
    return reward + acc / static_cast<double>(as.count);
}

double recompute_v_soft(const SearchNode& node, double alpha) {
    double m = -std::numeric_limits<double>::infinity();
    for (const ActionStats& as : node.actions) m = std::max(m, node.sign * as.q_soft);
    double e = 0.0;
    for (const ActionStats& as : node.actions) e += std::exp((node.sign * as.q_soft - m) / alpha);
    return node.sign * (alpha * std::log(e) + m);
}

double recompute_h_q(const SearchNode& node, int action) {
    const ActionStats& as = node.actions[action];
    double acc = 0.0;
    for (const ChildEntry& e : as.children)
        acc += static_cast<double>(e.node->visits) * e.node->h_v;
    return acc / static_cast<double>(as.count);
}

double recompute_h_v(const SearchNode& node, std::span<const double> policy) {
    double h = node.sign * entropy(policy);
    for (int a = 0; a < node.num_actions(); ++a) h += policy[a] * node.actions[a].h_q;
    return h;
}

void bellman_backup_naive(SearchNode& node, int action, double reward) {
    ActionStats& as = node.actions[action];
    as.q_bellman = recompute_q_bellman(node, action, reward);
    node.bellman_heap.update(action, node.sign * as.q_bellman);
    node.v_bellman_prev = node.v_bellman;
    node.v_bellman = recompute_v_bellman(node);
}

void bellman_backup_fast(SearchNode& node, int action, const SearchNode& child, double reward) {
    ActionStats& as = node.actions[action];
    as.q_bellman = incremental_weighted(as.q_bellman, reward, as.count, child.visits,
                                        child.v_bellman_prev, child.v_bellman);
    node.bellman_heap.update(action, node.sign * as.q_bellman);
    node.v_bellman_prev = node.v_bellman;
    node.v_bellman = node.sign * node.bellman_heap.top_key();
}

void soft_backup_naive(SearchNode& node, int action, double reward, double alpha) {
    ActionStats& as = node.actions[action];
    as.q_soft = recompute_q_soft(node, action, reward);
    node.soft_heap.update(action, node.sign * as.q_soft);
    // Refresh the max/expsum auxiliaries from scratch.
    double m = -std::numeric_limits<double>::infinity();
    for (const ActionStats& a : node.actions) m = std::max(m, node.sign * a.q_soft);
    double e = 0.0;
    for (const ActionStats& a : node.actions) e += std::exp((node.sign * a.q_soft - m) / alpha);
    node.soft_max = m;
    node.soft_expsum = e;
    node.v_soft_prev = node.v_soft;
    node.v_soft = node.sign * (alpha * std::log(e) + m);
}

void soft_backup_fast(SearchNode& node, int action, const SearchNode& child, double reward,
                      double alpha) {
    ActionStats& as = node.actions[action];
    const double old_signed = node.sign * as.q_soft;
    as.q_soft = incremental_weighted(as.q_soft, reward, as.count, child.visits,
                                     child.v_soft_prev, child.v_soft);
    const double new_signed = node.sign * as.q_soft;
    node.soft_heap.update(action, new_signed);

    const double m_old = node.soft_max;
    const double m_new = node.soft_heap.top_key();
    if ((m_old - m_new) / alpha > 500.0) {
        // The max dropped so far that rescaling the residual sum would hit the
        // exponential range limit; one full sweep restores it exactly.
        double e = 0.0;
        for (const ActionStats& a : node.actions)
            e += std::exp((node.sign * a.q_soft - m_new) / alpha);
        node.soft_expsum = e;
    } else {
        double e = node.soft_expsum - std::exp((old_signed - m_old) / alpha);
        e = std::max(e, 0.0);  // cancellation guard
        e = e * std::exp((m_old - m_new) / alpha) + std::exp((new_signed - m_new) / alpha);
        node.soft_expsum = e;
    }
    node.soft_max = m_new;
    node.v_soft_prev = node.v_soft;
    node.v_soft = node.sign * (alpha * std::log(node.soft_expsum) + m_new);
}

void entropy_backup_naive(SearchNode& node, int action, const AlgorithmConfig& cfg) {
    ActionStats& as = node.actions[action];
    as.h_q = recompute_h_q(node, action);
    const std::vector<double> pi = search_policy(node, cfg);
    node.h_v_prev = node.h_v;
    node.h_v = recompute_h_v(node, pi);
}

void entropy_backup_fast(SearchNode& node, int action, const SearchNode& child,
                         const AlgorithmConfig& cfg) {
    ActionStats& as = node.actions[action];
    const double h_q_old = as.h_q;
    as.h_q = incremental_weighted(as.h_q, 0.0, as.count, child.visits, child.h_v_prev,
                                  child.h_v);
    node.h_v_prev = node.h_v;
    const int cadence = entropy_tick_cadence(node, cfg);
    if ((node.visits - 1) % cadence == 0) {
        // Policy snapshot refresh: full recomputation from live values.
        node.entropy_policy = search_policy(node, cfg);
        node.h_v = recompute_h_v(node, node.entropy_policy);
    } else {
        node.h_v += node.entropy_policy[action] * (as.h_q - h_q_old);
    }
}

void average_return_update(SearchNode& node, int action, double trial_return) {
    ActionStats& as = node.actions[action];
    node.v_avg += (trial_return - node.v_avg) / static_cast<double>(node.visits);
    as.q_avg += (trial_return - as.q_avg) / static_cast<double>(as.count);
}

}  // namespace bmcts
