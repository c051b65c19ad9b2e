#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "bmcts/mdp.hpp"

namespace bmcts::env {

/// Deterministic A-ary tree of the given depth with i.i.d. leaf rewards in
/// [0, 1) derived from the seed; interior edges pay nothing. Used for
/// sampling and backup micro-benchmarks where the action count dominates
/// cost. Requires branching >= 2 and depth >= 1.
std::unique_ptr<MdpModel> make_wide_tree(int branching, int depth, std::uint64_t seed);

/// Same tree shape with explicit leaf rewards (depth-first leaf order);
/// rewards.size() must equal branching^depth.
std::unique_ptr<MdpModel> make_wide_tree(int branching, int depth, std::vector<double> rewards);

}  // namespace bmcts::env
