#include "bmcts/env/frozen_lake.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace bmcts::env {

namespace {

constexpr int kRowDelta[4] = {-1, 0, 1, 0};  // up, right, down, left
constexpr int kColDelta[4] = {0, 1, 0, -1};

int find_start(const GridMap& map) {
    int start = -1;
    int goals = 0;
    for (int i = 0; i < map.rows * map.cols; ++i) {
        if (map.cells[i] == Cell::start) {
            if (start >= 0) throw std::invalid_argument("grid map: more than one start cell");
            start = i;
        } else if (map.cells[i] == Cell::goal) {
            ++goals;
        }
    }
    if (start < 0) throw std::invalid_argument("grid map: no start cell");
    if (goals == 0) throw std::invalid_argument("grid map: no goal cell");
    return start;
}

// BFS over walkable cells; returns move count to the nearest goal, or -1.
int bfs_to_goal(const GridMap& map, int start) {
    std::vector<int> dist(map.rows * map.cols, -1);
    std::deque<int> queue{start};
    dist[start] = 0;
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop_front();
        if (map.cells[cur] == Cell::goal) return dist[cur];
        const int r = cur / map.cols, c = cur % map.cols;
        for (int m = 0; m < 4; ++m) {
            const int nr = r + kRowDelta[m], nc = c + kColDelta[m];
            if (nr < 0 || nr >= map.rows || nc < 0 || nc >= map.cols) continue;
            const int idx = nr * map.cols + nc;
            if (dist[idx] >= 0 || map.cells[idx] == Cell::hole) continue;
            dist[idx] = dist[cur] + 1;
            queue.push_back(idx);
        }
    }
    return -1;
}

class FrozenLake final : public MdpModel {
public:
    explicit FrozenLake(GridMap map) : map_(std::move(map)), start_cell_(find_start(map_)) {
        if (map_.horizon < 1) throw std::invalid_argument("grid map: horizon must be >= 1");
        if (bfs_to_goal(map_, start_cell_) < 0)
            throw std::invalid_argument("grid map: goal unreachable from start");
    }

    std::string id() const override {
        return "frozen_lake(" + std::to_string(map_.rows) + "x" + std::to_string(map_.cols) + ")";
    }

    // State encodes (cell, steps elapsed) so the arrival-time reward is a
    // function of the state alone.
    StateId initial_state() const override { return encode(start_cell_, 0); }
    int horizon() const override { return map_.horizon; }

    int num_actions(StateId s) const override {
        const Cell cell = map_.cells[cell_of(s)];
        return (cell == Cell::hole || cell == Cell::goal) ? 0 : 4;
    }

    double reward(StateId s, int action) const override {
        const auto [cell, steps] = decode(s);
        const int next = move(cell, action);
        if (map_.cells[next] == Cell::goal) return std::pow(0.99, steps + 1);
        return 0.0;
    }

    void transitions(StateId s, int action, std::vector<Transition>& out) const override {
        out.push_back({sample_successor(s, action, 0.0), 1.0});
    }

    StateId sample_successor(StateId s, int action, double) const override {
        const auto [cell, steps] = decode(s);
        return encode(move(cell, action), steps + 1);
    }

    const GridMap& map() const { return map_; }

private:
    StateId encode(int cell, int steps) const {
        return static_cast<StateId>(steps) * (map_.rows * map_.cols) + cell;
    }
    int cell_of(StateId s) const { return static_cast<int>(s % (map_.rows * map_.cols)); }
    std::pair<int, int> decode(StateId s) const {
        const int n = map_.rows * map_.cols;
        return {static_cast<int>(s % n), static_cast<int>(s / n)};
    }

    int move(int cell, int action) const {
        const int r = cell / map_.cols, c = cell % map_.cols;
        const int nr = r + kRowDelta[action], nc = c + kColDelta[action];
        if (nr < 0 || nr >= map_.rows || nc < 0 || nc >= map_.cols) return cell;  // wall bump
        return nr * map_.cols + nc;
    }

    GridMap map_;
    int start_cell_;
};

}  // namespace

GridMap parse_grid_map(std::string_view text, int horizon) {
    GridMap map;
    map.horizon = horizon;
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) lines.push_back(line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    if (lines.empty()) throw std::invalid_argument("grid map: empty map");

    map.rows = static_cast<int>(lines.size());
    map.cols = static_cast<int>(lines[0].size());
    for (const auto& line : lines) {
        if (static_cast<int>(line.size()) != map.cols)
            throw std::invalid_argument("grid map: ragged rows");
        for (char ch : line) {
            switch (ch) {
                case 'S': map.cells.push_back(Cell::start); break;
                case 'F': map.cells.push_back(Cell::floor); break;
                case 'H': map.cells.push_back(Cell::hole); break;
                case 'G': map.cells.push_back(Cell::goal); break;
                default:
                    throw std::invalid_argument(std::string("grid map: unknown cell '") + ch + "'");
            }
        }
    }
    // Surface structural violations at parse time.
    const int start = find_start(map);
    if (bfs_to_goal(map, start) < 0)
        throw std::invalid_argument("grid map: goal unreachable from start");
    return map;
}

int shortest_path_length(const GridMap& map) {
    return bfs_to_goal(map, find_start(map));
}

std::unique_ptr<MdpModel> make_frozen_lake(const GridMap& map) {
    return std::make_unique<FrozenLake>(map);
}

const std::string& frozen_lake_map_8x8() {
    static const std::string kMap =
        "SFFFFFHF\n"
        "FFFFFFFF\n"
        "FHFHFFFF\n"
        "FFFFFFHH\n"
        "FFFHFFFF\n"
        "FHHHFFFF\n"
        "FFFFFHFF\n"
        "FFFFFFFG\n";
    return kMap;
}

const std::string& frozen_lake_map_8x12() {
    static const std::string kMap =
        "SFHFFFHFFFFF\n"
        "FFFFFFFHFFFF\n"
        "HFFFFFHFFFFF\n"
        "FHFFHFFFFFFF\n"
        "HHFFFFFFFFFF\n"
        "FHFFFFHFFFFF\n"
        "FHFFFHHFHFFF\n"
        "FFFFFFFFFHHG\n";
    return kMap;
}

const std::string& frozen_lake_map_8x12_test() {
    static const std::string kMap =
        "SFHFFFFFFFHF\n"
        "FFFFFFFFFFFF\n"
        "FHFFFFHFFFFF\n"
        "FFFHFFFFFFHF\n"
        "FFFFFFFFFFFF\n"
        "FFFFHFFFHFFF\n"
        "FFHFFFFFFFFH\n"
        "FFFFFFFFFFFG\n";
    return kMap;
}

}  // namespace bmcts::env
