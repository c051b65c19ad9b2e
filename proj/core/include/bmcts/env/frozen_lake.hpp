#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bmcts/mdp.hpp"

namespace bmcts::env {

enum class Cell : char { start = 'S', floor = 'F', hole = 'H', goal = 'G' };

/// Rectangular map over {S, F, H, G} plus an episode horizon. A valid map has
/// exactly one start, at least one goal, and a walkable path from start to
/// goal.
struct GridMap {
    int rows = 0;
    int cols = 0;
    std::vector<Cell> cells;  // row-major
    int horizon = 100;

    Cell at(int r, int c) const { return cells[r * cols + c]; }
};

/// Parses the text map format: one row per line, characters S/F/H/G.
/// Throws std::invalid_argument on malformed input (ragged rows, unknown
/// characters, start/goal violations, unreachable goal).
GridMap parse_grid_map(std::string_view text, int horizon = 100);

/// Length of the shortest walkable start-to-goal path (number of moves),
/// by breadth-first search. Holes block.
int shortest_path_length(const GridMap& map);

inline constexpr int kMoveUp = 0;
inline constexpr int kMoveRight = 1;
inline constexpr int kMoveDown = 2;
inline constexpr int kMoveLeft = 3;

/// Deterministic gridworld. Four moves; walking into a wall stays in place.
/// Holes absorb with no reward. Arriving at the goal after t moves pays
/// 0.99^t and absorbs. The step count is part of the state.
std::unique_ptr<MdpModel> make_frozen_lake(const GridMap& map);

/// Maps used throughout the test suites, embedded as text fixtures.
const std::string& frozen_lake_map_8x8();
const std::string& frozen_lake_map_8x12();
const std::string& frozen_lake_map_8x12_test();

}  // namespace bmcts::env
