#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace bmcts {

/// SplitMix64 step, used for seed derivation and cheap stateless hashing.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic random stream. Distributions are implemented by hand so that
/// identical seeds produce identical draws on every platform; the std
/// distribution classes make no such guarantee.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed = 0)
        : root_seed_(seed), engine_(splitmix64(seed)) {}

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). Requires n > 0.
    std::size_t uniform_index(std::size_t n) {
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(engine_()) * n) >> 64);
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Derives an independent stream from the original seed and a tag.
    /// Streams split with distinct tags never share state.
    RandomStream split(std::uint64_t tag) const {
        return RandomStream(splitmix64(root_seed_ ^ splitmix64(tag ^ 0x5851f42d4c957f2dULL)));
    }

    std::uint64_t root_seed() const { return root_seed_; }

private:
    std::uint64_t root_seed_;
    std::mt19937_64 engine_;
};

/// FNV-1a over a string, for turning names into stream tags.
constexpr std::uint64_t hash_tag(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace bmcts
