#pragma once

#include <memory>

#include "bmcts/mdp.hpp"

namespace bmcts::env {

/// The decaying-temperature counterexample. The root chooses between a
/// deterministic payoff of 1 and the entry of a chain of `length` states. The
/// first length-1 chain states each offer {give up for 0, continue}; the last
/// chain state pays 2 and ends the episode. The optimal root action is the
/// chain (worth 2), but a fixed-temperature average-return search settles on
/// the payoff of 1.
struct ArCounterexampleSpec {
    int length = 10;  // D >= 1
};

inline constexpr int kArChainEnter = 0;  // a_1: enter the chain (optimal)
inline constexpr int kArTakeOne = 1;     // a_2: absorb with reward 1

std::unique_ptr<MdpModel> make_ar_counterexample(const ArCounterexampleSpec& spec);

/// State id of the first chain state (the successor of the root's chain
/// action), where the average value is observed in tests.
StateId ar_counterexample_chain_entry(const ArCounterexampleSpec& spec);

}  // namespace bmcts::env
