#pragma once

#include <cstdint>
#include <memory>

#include "bmcts/mdp.hpp"

namespace bmcts::env {

/// Seeded random finite-horizon MDP used by convergence and equivalence
/// tests: every state offers `num_actions` actions, each with 1..3 successors
/// drawn uniformly over the state set and normalized random probabilities,
/// and rewards uniform in [0, 1). Fully determined by the seed.
struct RandomMdpSpec {
    int num_states = 10;
    int num_actions = 3;
    int horizon = 4;
    std::uint64_t seed = 0;
};

std::unique_ptr<MdpModel> make_random_mdp(const RandomMdpSpec& spec);

}  // namespace bmcts::env
