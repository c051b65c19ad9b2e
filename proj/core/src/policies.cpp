#include "bmcts/policies.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bmcts {

std::vector<double> boltzmann_weights(std::span<const double> logits, double temperature) {
    if (!(temperature > 0.0))
        throw std::invalid_argument("boltzmann_weights: temperature must be > 0");
    if (logits.empty()) throw std::invalid_argument("boltzmann_weights: empty logits");
    double m = -std::numeric_limits<double>::infinity();
    for (double x : logits) {
        if (!std::isfinite(x)) throw std::invalid_argument("boltzmann_weights: non-finite logit");
        m = std::max(m, x);
    }
    std::vector<double> w(logits.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < logits.size(); ++i) {
        w[i] = std::exp((logits[i] - m) / temperature);
        sum += w[i];
    }
    for (double& x : w) x /= sum;
    return w;
}

double entropy(std::span<const double> probs) {
    double h = 0.0;
    for (double p : probs)
        if (p > 0.0) h -= p * std::log(p);
    return h;
}

OpponentTransform opponent_transform(AgentRole role) {
    if (role == AgentRole::minimizer) return {-1.0, true};
    return {1.0, false};
}

double lambda_mix(double epsilon, std::int64_t m) {
    return std::min(1.0, epsilon / std::log(std::exp(1.0) + static_cast<double>(m)));
}

std::vector<double> boltzmann_policy(const SearchNode& node, const AlgorithmConfig& cfg) {
    const int a = node.num_actions();
    std::vector<double> logits(a);
    const double w = cfg.entropy_weight(node.visits);
    for (int i = 0; i < a; ++i) {
        const ActionStats& as = node.actions[i];
        double value = 0.0;
        switch (cfg.algorithm) {
            case Algorithm::ments: value = as.q_soft; break;
            case Algorithm::bts: value = as.q_bellman; break;
            case Algorithm::dents: value = as.q_bellman + w * as.h_q; break;
            case Algorithm::ar_bts: value = as.q_avg; break;
            case Algorithm::ar_dents:
            case Algorithm::ar_ments: value = as.q_avg + w * as.h_q; break;
            case Algorithm::uct:
                throw std::logic_error("boltzmann_policy: UCT has no Boltzmann policy");
        }
        logits[i] = node.sign * value;
    }
    return boltzmann_weights(logits, cfg.temperature(node.visits));
}

std::vector<double> search_policy(const SearchNode& node, const AlgorithmConfig& cfg) {
    std::vector<double> pi = boltzmann_policy(node, cfg);
    const double lambda = lambda_mix(cfg.epsilon, node.visits);
    const double uniform = lambda / node.num_actions();
    for (double& p : pi) p = (1.0 - lambda) * p + uniform;
    return pi;
}

int uct_select(const SearchNode& node, double c, RandomStream& rng) {
    int unvisited = 0;
    for (const ActionStats& as : node.actions) unvisited += as.count == 0;
    if (unvisited > 0) {
        std::size_t pick = rng.uniform_index(unvisited);
        for (int i = 0; i < node.num_actions(); ++i) {
            if (node.actions[i].count == 0 && pick-- == 0) return i;
        }
    }
    const double log_n = std::log(static_cast<double>(node.visits));
    int best = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < node.num_actions(); ++i) {
        const ActionStats& as = node.actions[i];
        const double ucb = node.sign * as.q_avg + c * std::sqrt(log_n / as.count);
        if (ucb > best_value) {
            best_value = ucb;
            best = i;
        }
    }
    return best;
}

int categorical_sample(std::span<const double> probs, double u) {
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(probs.size()) - 1;
}

int cached_policy_sample(SearchNode& node, const AlgorithmConfig& cfg, RandomStream& rng) {
    const int cadence =
        cfg.alias_rebuild_every > 0 ? cfg.alias_rebuild_every : node.num_actions();
    if (node.visits % cadence == 0) {
        node.sampling_policy = search_policy(node, cfg);
        node.alias_table = alias_build(node.sampling_policy);
    }
    return static_cast<int>(alias_sample(node.alias_table, rng));
}

int recommend_action(const SearchNode& node, const AlgorithmConfig& cfg) {
    if (node.terminal()) throw std::logic_error("recommend_action: terminal node");
    if (cfg.recommend_rule == RecommendRule::most_visited) {
        int best = 0;
        for (int i = 1; i < node.num_actions(); ++i)
            if (node.actions[i].count > node.actions[best].count) best = i;
        return best;
    }
    int best = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < node.num_actions(); ++i) {
        const ActionStats& as = node.actions[i];
        double value;
        switch (cfg.algorithm) {
            case Algorithm::ments: value = as.q_soft; break;
            case Algorithm::bts:
            case Algorithm::dents: value = as.q_bellman; break;
            default: value = as.q_avg; break;  // UCT and the AR variants
        }
        value *= node.sign;  // minimizer nodes recommend the argmin
        if (value > best_value) {
            best_value = value;
            best = i;
        }
    }
    return best;
}

}  // namespace bmcts
