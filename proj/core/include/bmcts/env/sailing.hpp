#pragma once

#include <array>
#include <memory>

#include "bmcts/mdp.hpp"

namespace bmcts::env {

/// Wind and heading directions: 0 = North/up, 1 = North-East, 2 = East, ...,
/// 7 = North-West, i.e. 45-degree steps clockwise. The wind direction names
/// where the wind blows FROM, so heading equal to the wind direction means
/// sailing directly into it.
struct SailingSpec {
    int size = 6;                      // square grid, start bottom-left, goal top-right
    std::array<std::array<double, 8>, 8> wind_matrix;  // row-stochastic
    std::array<double, 4> tack_cost = {4.0, 3.0, 2.0, 1.0};  // angular diff 1..4 (45-degree units)
    int initial_wind = 3;              // South-East
    int horizon = 50;

    static const std::array<std::array<double, 8>, 8>& default_wind_matrix();
    static SailingSpec defaults();
};

/// Stochastic-wind gridworld. The state is (position, wind direction); each
/// step offers the headings that stay on the grid and are not directly into
/// the wind, pays the negated tack cost, and redraws the wind from the
/// matrix row of the current wind. The goal corner absorbs.
///
/// Throws std::invalid_argument if the wind matrix rows do not sum to 1, the
/// costs are not positive, or the initial wind is out of range.
std::unique_ptr<MdpModel> make_sailing(const SailingSpec& spec);

/// The headings offered at a given (cell row, cell col, wind) under `spec`.
std::vector<int> sailing_offered_headings(const SailingSpec& spec, int row, int col, int wind);

/// Cost of heading `h` under wind `w` (positive), or a negative value if the
/// heading is directly into the wind and therefore forbidden.
double sailing_tack_cost(const SailingSpec& spec, int heading, int wind);

}  // namespace bmcts::env
