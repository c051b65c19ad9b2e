#pragma once

#include <memory>
#include <optional>

#include "bmcts/mdp.hpp"

namespace bmcts::env {

/// Standard 3x3 tic-tac-toe as a two-player zero-sum MDP. X (the maximizer)
/// moves first; moves place a piece into an empty cell. The move that
/// completes three in a row pays +1 to X or -1 if made by O; a draw pays 0.
/// Actions are indices into the ordered list of empty cells.
std::unique_ptr<MdpModel> make_tictactoe();

/// Encodes a board given in row-major order with characters 'x', 'o', '.'.
/// Used to start analyses from mid-game positions.
StateId tictactoe_state(const char (&board)[10]);

/// The board cell (0..8) that action `action` fills at state `s`.
int tictactoe_cell_of_action(StateId s, int action);

/// 'x', 'o' or '.' winner of the position, or nullopt if play continues.
std::optional<char> tictactoe_winner(StateId s);

}  // namespace bmcts::env
