#include "bmcts/env/random_mdp.hpp"

#include <stdexcept>

#include "bmcts/random.hpp"

namespace bmcts::env {

namespace {

class RandomMdp final : public MdpModel {
public:
    explicit RandomMdp(const RandomMdpSpec& spec) : spec_(spec) {
        if (spec.num_states < 1 || spec.num_actions < 1 || spec.horizon < 1)
            throw std::invalid_argument("make_random_mdp: sizes must be positive");
        RandomStream rng(spec.seed);
        const int n = spec.num_states, a = spec.num_actions;
        rewards_.resize(n * a);
        successors_.resize(n * a);
        for (int s = 0; s < n; ++s) {
            for (int act = 0; act < a; ++act) {
                rewards_[s * a + act] = rng.uniform();
                const int branches = 1 + static_cast<int>(rng.uniform_index(3));
                auto& succ = successors_[s * a + act];
                double total = 0.0;
                for (int b = 0; b < branches; ++b) {
                    const StateId next = static_cast<StateId>(rng.uniform_index(n));
                    const double w = 0.1 + rng.uniform();
                    succ.push_back({next, w});
                    total += w;
                }
                for (auto& t : succ) t.prob /= total;
            }
        }
    }

    std::string id() const override {
        return "random_mdp(S=" + std::to_string(spec_.num_states) +
               ",A=" + std::to_string(spec_.num_actions) + ",H=" + std::to_string(spec_.horizon) +
               ",seed=" + std::to_string(spec_.seed) + ")";
    }
    StateId initial_state() const override { return 0; }
    int horizon() const override { return spec_.horizon; }
    int num_actions(StateId) const override { return spec_.num_actions; }

    double reward(StateId s, int action) const override {
        return rewards_[s * spec_.num_actions + action];
    }

    void transitions(StateId s, int action, std::vector<Transition>& out) const override {
        const auto& succ = successors_[s * spec_.num_actions + action];
        out.insert(out.end(), succ.begin(), succ.end());
    }

private:
    RandomMdpSpec spec_;
    std::vector<double> rewards_;
    std::vector<std::vector<Transition>> successors_;
};

}  // namespace

std::unique_ptr<MdpModel> make_random_mdp(const RandomMdpSpec& spec) {
    return std::make_unique<RandomMdp>(spec);
}

}  // namespace bmcts::env
