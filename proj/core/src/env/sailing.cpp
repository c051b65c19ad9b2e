#include "bmcts/env/sailing.hpp"

#include <cmath>
#include <stdexcept>

namespace bmcts::env {

namespace {

constexpr int kRowDelta[8] = {-1, -1, 0, 1, 1, 1, 0, -1};  // N, NE, E, SE, S, SW, W, NW
constexpr int kColDelta[8] = {0, 1, 1, 1, 0, -1, -1, -1};

int angular_diff(int a, int b) {
    int d = std::abs(a - b) % 8;
    return d > 4 ? 8 - d : d;
}

class Sailing final : public MdpModel {
public:
    explicit Sailing(SailingSpec spec) : spec_(std::move(spec)) {
        if (spec_.size < 2) throw std::invalid_argument("make_sailing: grid too small");
        if (spec_.initial_wind < 0 || spec_.initial_wind > 7)
            throw std::invalid_argument("make_sailing: initial wind out of range");
        for (double c : spec_.tack_cost)
            if (!(c > 0.0)) throw std::invalid_argument("make_sailing: tack costs must be positive");
        for (const auto& row : spec_.wind_matrix) {
            double sum = 0.0;
            for (double p : row) {
                if (p < 0.0) throw std::invalid_argument("make_sailing: negative wind probability");
                sum += p;
            }
            if (std::abs(sum - 1.0) > 1e-12)
                throw std::invalid_argument("make_sailing: wind matrix row does not sum to 1");
        }
        // Per (cell, wind): the offered headings, precomputed.
        const int n = spec_.size;
        offered_.resize(n * n * 8);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                for (int w = 0; w < 8; ++w)
                    offered_[(r * n + c) * 8 + w] = sailing_offered_headings(spec_, r, c, w);
    }

    std::string id() const override {
        return "sailing(" + std::to_string(spec_.size) + "x" + std::to_string(spec_.size) + ")";
    }

    StateId initial_state() const override {
        return encode((spec_.size - 1) * spec_.size, spec_.initial_wind);
    }
    int horizon() const override { return spec_.horizon; }

    int num_actions(StateId s) const override {
        const auto [cell, wind] = decode(s);
        if (cell == goal_cell()) return 0;
        return static_cast<int>(offered_[cell * 8 + wind].size());
    }

    double reward(StateId s, int action) const override {
        const auto [cell, wind] = decode(s);
        const int heading = offered_[cell * 8 + wind][action];
        return -sailing_tack_cost(spec_, heading, wind);
    }

    void transitions(StateId s, int action, std::vector<Transition>& out) const override {
        const auto [cell, wind] = decode(s);
        const int next_cell = moved_cell(cell, offered_[cell * 8 + wind][action]);
        for (int w2 = 0; w2 < 8; ++w2) {
            const double p = spec_.wind_matrix[wind][w2];
            if (p > 0.0) out.push_back({encode(next_cell, w2), p});
        }
    }

private:
    StateId encode(int cell, int wind) const { return static_cast<StateId>(cell) * 8 + wind; }
    std::pair<int, int> decode(StateId s) const {
        return {static_cast<int>(s / 8), static_cast<int>(s % 8)};
    }
    int goal_cell() const { return spec_.size - 1; }  // top-right corner, row 0

    int moved_cell(int cell, int heading) const {
        const int n = spec_.size;
        const int r = cell / n + kRowDelta[heading];
        const int c = cell % n + kColDelta[heading];
        return r * n + c;
    }

    SailingSpec spec_;
    std::vector<std::vector<int>> offered_;
};

}  // namespace

const std::array<std::array<double, 8>, 8>& SailingSpec::default_wind_matrix() {
    static const std::array<std::array<double, 8>, 8> kMatrix = {{
        {0.4, 0.3, 0.0, 0.0, 0.0, 0.0, 0.0, 0.3},
        {0.4, 0.3, 0.3, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.4, 0.3, 0.3, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.4, 0.3, 0.3, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.4, 0.2, 0.4, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.3, 0.3, 0.4, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 0.3, 0.4},
        {0.4, 0.0, 0.0, 0.0, 0.0, 0.0, 0.3, 0.3},
    }};
    return kMatrix;
}

SailingSpec SailingSpec::defaults() {
    SailingSpec spec;
    spec.wind_matrix = default_wind_matrix();
    return spec;
}

std::unique_ptr<MdpModel> make_sailing(const SailingSpec& spec) {
    return std::make_unique<Sailing>(spec);
}

std::vector<int> sailing_offered_headings(const SailingSpec& spec, int row, int col, int wind) {
    std::vector<int> headings;
    for (int h = 0; h < 8; ++h) {
        if (angular_diff(h, wind) == 0) continue;  // directly into the wind
        const int nr = row + kRowDelta[h], nc = col + kColDelta[h];
        if (nr < 0 || nr >= spec.size || nc < 0 || nc >= spec.size) continue;
        headings.push_back(h);
    }
    return headings;
}

double sailing_tack_cost(const SailingSpec& spec, int heading, int wind) {
    const int diff = angular_diff(heading, wind);
    if (diff == 0) return -1.0;
    return spec.tack_cost[diff - 1];
}

}  // namespace bmcts::env
