#pragma once

#include <string>

#include "bmcts/dp.hpp"
#include "bmcts/mdp.hpp"

namespace bmcts::tools {

/// Serializes a full value table as text: a schema header, then one line per
/// (state, timestep) with the value and the per-action Q-values, sorted by
/// (timestep, state). Used for regression goldens and test fixtures.
std::string format_oracle(const MdpModel& mdp, const ValueTables& tables);

/// Solves the environment with the requested oracle and formats it.
/// kind: "standard", "soft" (uses alpha), or "minimax".
std::string dump_oracle(const MdpModel& mdp, const std::string& kind, double alpha = 1.0);

}  // namespace bmcts::tools
