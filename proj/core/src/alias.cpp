#include "bmcts/alias.hpp"

#include <cmath>
#include <stdexcept>

namespace bmcts {

AliasTable alias_build(std::span<const double> weights) {
    const std::size_t m = weights.size();
    if (m == 0) throw std::invalid_argument("alias_build: empty weight vector");

    double total = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w)) throw std::invalid_argument("alias_build: non-finite weight");
        if (w < 0.0) throw std::invalid_argument("alias_build: negative weight");
        total += w;
    }
    if (total <= 0.0) throw std::invalid_argument("alias_build: all weights are zero");

    AliasTable table;
    table.thresholds.resize(m);
    table.aliases.resize(m);

    // Scaled probabilities: average is exactly 1.
    std::vector<double> scaled(m);
    for (std::size_t i = 0; i < m; ++i) scaled[i] = weights[i] * static_cast<double>(m) / total;

    std::vector<std::size_t> small, large;
    small.reserve(m);
    large.reserve(m);
    for (std::size_t i = 0; i < m; ++i) (scaled[i] < 1.0 ? small : large).push_back(i);

    while (!small.empty() && !large.empty()) {
        const std::size_t s = small.back();
        const std::size_t l = large.back();
        small.pop_back();
        table.thresholds[s] = scaled[s];
        table.aliases[s] = l;
        scaled[l] -= 1.0 - scaled[s];
        if (scaled[l] < 1.0) {
            large.pop_back();
            small.push_back(l);
        }
    }
    // Leftovers hold (up to round-off) exactly probability 1.
    for (std::size_t i : large) {
        table.thresholds[i] = 1.0;
        table.aliases[i] = i;
    }
    for (std::size_t i : small) {
        table.thresholds[i] = 1.0;
        table.aliases[i] = i;
    }
    return table;
}

std::size_t alias_sample(const AliasTable& table, RandomStream& rng) {
    const std::size_t i = rng.uniform_index(table.size());
    const double x = rng.uniform();
    return x > table.thresholds[i] ? table.aliases[i] : i;
}

}  // namespace bmcts
