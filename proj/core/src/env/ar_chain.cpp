#include "bmcts/env/ar_chain.hpp"

#include <stdexcept>

namespace bmcts::env {

namespace {

// Ids: 0 terminal, 1 root, 2..D two-action chain states, D+1 the forced
// final state paying 2.
constexpr StateId kTerminal = 0;
constexpr StateId kRoot = 1;

class ArCounterexample final : public MdpModel {
public:
    explicit ArCounterexample(const ArCounterexampleSpec& spec) : d_(spec.length) {
        if (d_ < 1) throw std::invalid_argument("make_ar_counterexample: length must be >= 1");
    }

    std::string id() const override { return "ar_chain(D=" + std::to_string(d_) + ")"; }
    StateId initial_state() const override { return kRoot; }
    int horizon() const override { return d_ + 2; }

    int num_actions(StateId s) const override {
        if (s == kTerminal) return 0;
        if (s == kRoot) return 2;
        return s == final_state() ? 1 : 2;
    }

    double reward(StateId s, int action) const override {
        if (s == kRoot) return action == kArTakeOne ? 1.0 : 0.0;
        if (s == final_state()) return 2.0;
        return 0.0;  // gate states: both giving up and continuing are free
    }

    void transitions(StateId s, int action, std::vector<Transition>& out) const override {
        out.push_back({sample_successor(s, action, 0.0), 1.0});
    }

    StateId sample_successor(StateId s, int action, double) const override {
        if (s == kRoot) return action == kArChainEnter ? 2 : kTerminal;
        if (s == final_state()) return kTerminal;
        return action == 1 ? s + 1 : kTerminal;  // gate: 0 gives up, 1 continues
    }

private:
    StateId final_state() const { return d_ + 1; }
    int d_;
};

}  // namespace

std::unique_ptr<MdpModel> make_ar_counterexample(const ArCounterexampleSpec& spec) {
    return std::make_unique<ArCounterexample>(spec);
}

StateId ar_counterexample_chain_entry(const ArCounterexampleSpec&) { return 2; }

}  // namespace bmcts::env
