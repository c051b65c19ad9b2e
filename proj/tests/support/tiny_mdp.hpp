#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bmcts/mdp.hpp"

// Table-driven MDP for hand-built test fixtures.
namespace testsupport {

class TinyMdp final : public bmcts::MdpModel {
public:
    TinyMdp(bmcts::StateId initial, int horizon) : initial_(initial), horizon_(horizon) {}

    // Adds an action to `state` (index = number already added) with the given
    // reward and successor distribution.
    TinyMdp& add_action(bmcts::StateId state, double reward,
                        std::vector<bmcts::Transition> successors) {
        rows_[state].push_back({reward, std::move(successors)});
        return *this;
    }

    TinyMdp& set_role(bmcts::StateId state, bmcts::AgentRole role) {
        roles_[state] = role;
        return *this;
    }

    std::string id() const override { return "tiny"; }
    bmcts::StateId initial_state() const override { return initial_; }
    int horizon() const override { return horizon_; }

    int num_actions(bmcts::StateId s) const override {
        auto it = rows_.find(s);
        return it == rows_.end() ? 0 : static_cast<int>(it->second.size());
    }

    double reward(bmcts::StateId s, int action) const override {
        return rows_.at(s).at(action).reward;
    }

    void transitions(bmcts::StateId s, int action,
                     std::vector<bmcts::Transition>& out) const override {
        const auto& succ = rows_.at(s).at(action).successors;
        out.insert(out.end(), succ.begin(), succ.end());
    }

    bmcts::AgentRole agent_role(bmcts::StateId s) const override {
        auto it = roles_.find(s);
        return it == roles_.end() ? bmcts::AgentRole::maximizer : it->second;
    }

private:
    struct Row {
        double reward;
        std::vector<bmcts::Transition> successors;
    };
    bmcts::StateId initial_;
    int horizon_;
    std::map<bmcts::StateId, std::vector<Row>> rows_;
    std::map<bmcts::StateId, bmcts::AgentRole> roles_;
};

}  // namespace testsupport
