#pragma once

#include <memory>

#include "bmcts/mdp.hpp"

namespace bmcts::env {

/// Deterministic chain of length D with an early-exit action at every state.
/// States are 1..D; action 0 exits to an absorbing leaf with reward (D-d)/D,
/// action 1 advances along the chain with reward 0, except at state D where
/// it pays `final_reward` and absorbs. Horizon is D+1.
struct DChainSpec {
    int length = 10;            // D >= 1
    double final_reward = 1.0;  // reward of action 1 at state D
};

inline constexpr int kDChainExit = 0;      // a_L
inline constexpr int kDChainAdvance = 1;   // a_R

std::unique_ptr<MdpModel> make_dchain(const DChainSpec& spec);

}  // namespace bmcts::env
