#include "bmcts/env/tictactoe.hpp"

#include <array>
#include <stdexcept>

namespace bmcts::env {

namespace {

// Board encoded in base 3, cell 0 least significant: 0 empty, 1 X, 2 O.
constexpr int kLines[8][3] = {
    {0, 1, 2}, {3, 4, 5}, {6, 7, 8},  // rows
    {0, 3, 6}, {1, 4, 7}, {2, 5, 8},  // columns
    {0, 4, 8}, {2, 4, 6},             // diagonals
};

std::array<int, 9> unpack(StateId s) {
    std::array<int, 9> cells{};
    for (int i = 0; i < 9; ++i) {
        cells[i] = static_cast<int>(s % 3);
        s /= 3;
    }
    return cells;
}

StateId pack(const std::array<int, 9>& cells) {
    StateId s = 0;
    for (int i = 8; i >= 0; --i) s = s * 3 + cells[i];
    return s;
}

int line_winner(const std::array<int, 9>& cells) {
    for (const auto& line : kLines) {
        const int v = cells[line[0]];
        if (v != 0 && cells[line[1]] == v && cells[line[2]] == v) return v;
    }
    return 0;
}

int piece_count(const std::array<int, 9>& cells) {
    int n = 0;
    for (int c : cells) n += c != 0;
    return n;
}

class TicTacToe final : public MdpModel {
public:
    std::string id() const override { return "tictactoe"; }
    StateId initial_state() const override { return 0; }
    int horizon() const override { return 9; }

    int num_actions(StateId s) const override {
        const auto cells = unpack(s);
        if (line_winner(cells) != 0) return 0;
        return 9 - piece_count(cells);
    }

    double reward(StateId s, int action) const override {
        auto cells = unpack(s);
        const int mover = piece_count(cells) % 2 == 0 ? 1 : 2;
        cells[nth_empty(cells, action)] = mover;
        const int w = line_winner(cells);
        if (w == 1) return 1.0;
        if (w == 2) return -1.0;
        return 0.0;
    }

    void transitions(StateId s, int action, std::vector<Transition>& out) const override {
        out.push_back({sample_successor(s, action, 0.0), 1.0});
    }

    StateId sample_successor(StateId s, int action, double) const override {
        auto cells = unpack(s);
        const int mover = piece_count(cells) % 2 == 0 ? 1 : 2;
        cells[nth_empty(cells, action)] = mover;
        return pack(cells);
    }

    AgentRole agent_role(StateId s) const override {
        return piece_count(unpack(s)) % 2 == 0 ? AgentRole::maximizer : AgentRole::minimizer;
    }

    static int nth_empty(const std::array<int, 9>& cells, int n) {
        for (int i = 0; i < 9; ++i) {
            if (cells[i] == 0 && n-- == 0) return i;
        }
        throw std::out_of_range("tictactoe: action index out of range");
    }
};

}  // namespace

std::unique_ptr<MdpModel> make_tictactoe() { return std::make_unique<TicTacToe>(); }

StateId tictactoe_state(const char (&board)[10]) {
    std::array<int, 9> cells{};
    for (int i = 0; i < 9; ++i) {
        switch (board[i]) {
            case '.': cells[i] = 0; break;
            case 'x': case 'X': cells[i] = 1; break;
            case 'o': case 'O': cells[i] = 2; break;
            default: throw std::invalid_argument("tictactoe_state: expected x, o or .");
        }
    }
    return pack(cells);
}

int tictactoe_cell_of_action(StateId s, int action) {
    return TicTacToe::nth_empty(unpack(s), action);
}

std::optional<char> tictactoe_winner(StateId s) {
    const auto cells = unpack(s);
    const int w = line_winner(cells);
    if (w == 1) return 'x';
    if (w == 2) return 'o';
    if (piece_count(cells) == 9) return '.';
    return std::nullopt;
}

}  // namespace bmcts::env
