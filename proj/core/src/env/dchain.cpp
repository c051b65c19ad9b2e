#include "bmcts/env/dchain.hpp"

#include <cstdio>
#include <stdexcept>

namespace bmcts::env {

namespace {

constexpr StateId kLeaf = 0;  // shared absorbing state

class DChain final : public MdpModel {
public:
    explicit DChain(const DChainSpec& spec) : spec_(spec) {
        if (spec.length < 1) throw std::invalid_argument("make_dchain: length must be >= 1");
    }

    std::string id() const override {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "dchain(D=%d,Rf=%g)", spec_.length, spec_.final_reward);
        return buf;
    }
    StateId initial_state() const override { return 1; }
    int horizon() const override { return spec_.length + 1; }
    int num_actions(StateId s) const override { return s == kLeaf ? 0 : 2; }

    double reward(StateId s, int action) const override {
        const int d = static_cast<int>(s);
        if (action == kDChainExit) {
            return static_cast<double>(spec_.length - d) / spec_.length;
        }
        return d == spec_.length ? spec_.final_reward : 0.0;
    }

    void transitions(StateId s, int action, std::vector<Transition>& out) const override {
        if (action == kDChainAdvance && s < spec_.length) {
            out.push_back({s + 1, 1.0});
        } else {
            out.push_back({kLeaf, 1.0});
        }
    }

    StateId sample_successor(StateId s, int action, double) const override {
        if (action == kDChainAdvance && s < spec_.length) return s + 1;
        return kLeaf;
    }

private:
    DChainSpec spec_;
};

}  // namespace

std::unique_ptr<MdpModel> make_dchain(const DChainSpec& spec) {
    return std::make_unique<DChain>(spec);
}

}  // namespace bmcts::env
