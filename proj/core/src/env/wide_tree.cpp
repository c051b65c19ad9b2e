#include "bmcts/env/wide_tree.hpp"

#include <stdexcept>

#include "bmcts/random.hpp"

namespace bmcts::env {

namespace {

// Nodes are indexed level by level: root 0, child(i, a) = i*A + a + 1.
class WideTree final : public MdpModel {
public:
    WideTree(int branching, int depth, std::uint64_t seed, std::vector<double> rewards)
        : branching_(branching), depth_(depth), seed_(seed), rewards_(std::move(rewards)) {
        if (branching < 2) throw std::invalid_argument("make_wide_tree: branching must be >= 2");
        if (depth < 1) throw std::invalid_argument("make_wide_tree: depth must be >= 1");
        level_offset_.resize(depth_ + 1);
        std::int64_t offset = 0, width = 1;
        for (int lvl = 0; lvl <= depth_; ++lvl) {
            level_offset_[lvl] = offset;
            offset += width;
            width *= branching_;
        }
        if (!rewards_.empty() &&
            rewards_.size() != static_cast<std::size_t>(offset - level_offset_[depth_]))
            throw std::invalid_argument("make_wide_tree: rewards size must be branching^depth");
    }

    std::string id() const override {
        return "wide_tree(A=" + std::to_string(branching_) + ",d=" + std::to_string(depth_) + ")";
    }
    StateId initial_state() const override { return 0; }
    int horizon() const override { return depth_; }

    int num_actions(StateId s) const override {
        return s >= level_offset_[depth_] ? 0 : branching_;
    }

    double reward(StateId s, int action) const override {
        const StateId child = s * branching_ + action + 1;
        if (child < level_offset_[depth_]) return 0.0;
        const std::int64_t leaf = child - level_offset_[depth_];
        if (!rewards_.empty()) return rewards_[leaf];
        return static_cast<double>(splitmix64(seed_ ^ static_cast<std::uint64_t>(leaf)) >> 11) *
               0x1.0p-53;
    }

    void transitions(StateId s, int action, std::vector<Transition>& out) const override {
        out.push_back({s * branching_ + action + 1, 1.0});
    }

    StateId sample_successor(StateId s, int action, double) const override {
        return s * branching_ + action + 1;
    }

private:
    int branching_;
    int depth_;
    std::uint64_t seed_;
    std::vector<double> rewards_;
    std::vector<std::int64_t> level_offset_;
};

}  // namespace

std::unique_ptr<MdpModel> make_wide_tree(int branching, int depth, std::uint64_t seed) {
    return std::make_unique<WideTree>(branching, depth, seed, std::vector<double>{});
}

std::unique_ptr<MdpModel> make_wide_tree(int branching, int depth, std::vector<double> rewards) {
    return std::make_unique<WideTree>(branching, depth, 0, std::move(rewards));
}

}  // namespace bmcts::env
