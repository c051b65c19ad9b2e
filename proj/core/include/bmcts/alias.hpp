#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bmcts/random.hpp"

namespace bmcts {

/// Walker alias table: O(m) construction, O(1) categorical sampling.
///
/// Category i is drawn with probability
///   p_i = (thresholds[i] + sum_{j : aliases[j] == i} (1 - thresholds[j])) / m,
/// which equals the normalized input weight exactly up to round-off.
struct AliasTable {
    std::vector<double> thresholds;     // in [0, 1]
    std::vector<std::size_t> aliases;   // aliases[i] != i whenever thresholds[i] < 1

    std::size_t size() const { return thresholds.size(); }
};

/// Builds an alias table from nonnegative weights. Throws
/// std::invalid_argument if the weights are empty, all zero, negative, or
/// non-finite.
AliasTable alias_build(std::span<const double> weights);

/// Draws one category index: one uniform index draw plus one uniform real.
std::size_t alias_sample(const AliasTable& table, RandomStream& rng);

}  // namespace bmcts
