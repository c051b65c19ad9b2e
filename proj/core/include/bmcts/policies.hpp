#pragma once

#include <span>
#include <vector>

#include "bmcts/config.hpp"
#include "bmcts/node.hpp"
#include "bmcts/random.hpp"

namespace bmcts {

/// Max-shifted softmax of logits / temperature. The output sums to 1.
/// Throws std::invalid_argument on non-finite logits or temperature <= 0.
std::vector<double> boltzmann_weights(std::span<const double> logits, double temperature);

/// Shannon entropy in nats; 0 log 0 is treated as 0.
double entropy(std::span<const double> probs);

/// Two-player adjustment applied at minimizer nodes: `sign` negates the
/// Boltzmann logits, swaps the value extreme from max to min, and negates a
/// node's own entropy contribution; `argmin` flips the recommendation.
/// For maximizer nodes the transform is the identity.
struct OpponentTransform {
    double sign = 1.0;
    bool argmin = false;
};
OpponentTransform opponent_transform(AgentRole role);

/// The stochastic search policy pi(.|s) of the configured algorithm at this
/// node: a Boltzmann distribution over the algorithm's value table mixed with
/// a uniform floor of weight lambda = min(1, epsilon / log(e + N(s))). Uses
/// the node's current statistics and visit count.
std::vector<double> search_policy(const SearchNode& node, const AlgorithmConfig& cfg);

/// The un-mixed Boltzmann part rho(.|s) of the search policy.
std::vector<double> boltzmann_policy(const SearchNode& node, const AlgorithmConfig& cfg);

/// Uniform-mixture weight at visit count m.
double lambda_mix(double epsilon, std::int64_t m);

/// UCB action selection: an unvisited action first (uniformly at random among
/// them), otherwise the argmax of sign*Q +c*sqrt(log N(s) / N(s,a)).
int uct_select(const SearchNode& node, double c, RandomStream& rng);

/// Inverse-CDF draw from a probability vector using one uniform number.
int categorical_sample(std::span<const double> probs, double u);

/// Samples an action from the node's cached alias table, rebuilding the
/// table from the current search policy every `cadence` visits (the action
/// count when cfg.alias_rebuild_every is 0). Between rebuilds the sampled
/// distribution is the one frozen at the last rebuild.
int cached_policy_sample(SearchNode& node, const AlgorithmConfig& cfg, RandomStream& rng);

/// Recommended action: argmax (argmin at minimizer nodes) over the
/// algorithm's designated table, or the most-visited action. Ties break to
/// the lowest index. Throws std::logic_error at terminal nodes.
int recommend_action(const SearchNode& node, const AlgorithmConfig& cfg);

}  // namespace bmcts
