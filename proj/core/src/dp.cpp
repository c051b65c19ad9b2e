#include "bmcts/dp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace bmcts {

std::uint64_t ValueTables::key(StateId s, int t) {
    return static_cast<std::uint64_t>(s) * 0x100000000ULL ^ static_cast<std::uint32_t>(t);
}

double ValueTables::value(StateId s, int t) const {
    if (t >= horizon_) return 0.0;
    auto it = entries_.find(key(s, t));
    if (it == entries_.end()) throw std::out_of_range("ValueTables::value: state not tabulated");
    return entries_flat_[it->second].v;
}

std::span<const double> ValueTables::q_values(StateId s, int t) const {
    auto it = entries_.find(key(s, t));
    if (it == entries_.end()) throw std::out_of_range("ValueTables::q_values: state not tabulated");
    return entries_flat_[it->second].q;
}

void ValueTables::insert(StateId s, int t, double v, std::vector<double> q) {
    entries_[key(s, t)] = entries_flat_.size();
    entries_flat_.push_back(Entry{s, t, v, std::move(q)});
}

std::vector<std::vector<StateId>> reachable_layers(const MdpModel& mdp) {
    const int h = mdp.horizon();
    std::vector<std::vector<StateId>> layers(h + 1);
    layers[0].push_back(mdp.initial_state());
    std::vector<Transition> ts;
    for (int t = 0; t < h; ++t) {
        std::unordered_set<StateId> next;
        for (StateId s : layers[t]) {
            const int actions = mdp.num_actions(s);
            for (int a = 0; a < actions; ++a) {
                ts.clear();
                mdp.transitions(s, a, ts);
                for (const Transition& tr : ts) next.insert(tr.next);
            }
        }
        layers[t + 1].assign(next.begin(), next.end());
        std::sort(layers[t + 1].begin(), layers[t + 1].end());
    }
    return layers;
}

namespace {

enum class Combine { max_only, soft, by_role };

ValueTables backward_induction(const MdpModel& mdp, Combine combine, double alpha) {
    const int h = mdp.horizon();
    ValueTables tables(combine == Combine::soft      ? ValueFlavor::soft
                       : combine == Combine::by_role ? ValueFlavor::minimax
                                                     : ValueFlavor::standard,
                       h, alpha);
    auto layers = reachable_layers(mdp);
    std::vector<Transition> ts;

    for (int t = h - 1; t >= 0; --t) {
        for (StateId s : layers[t]) {
            const int actions = mdp.num_actions(s);
            if (actions == 0) {
                tables.insert(s, t, 0.0, {});
                continue;
            }
            std::vector<double> q(actions);
            for (int a = 0; a < actions; ++a) {
                ts.clear();
                mdp.transitions(s, a, ts);
                double ev = 0.0;
                for (const Transition& tr : ts) ev += tr.prob * tables.value(tr.next, t + 1);
                q[a] = mdp.reward(s, a) + ev;
            }
            double v;
            switch (combine) {
                case Combine::max_only:
                    v = *std::max_element(q.begin(), q.end());
                    break;
                case Combine::by_role:
                    v = mdp.agent_role(s) == AgentRole::maximizer
                            ? *std::max_element(q.begin(), q.end())
                            : *std::min_element(q.begin(), q.end());
                    break;
                case Combine::soft: {
                    const double m = *std::max_element(q.begin(), q.end());
                    double e = 0.0;
                    for (double qa : q) e += std::exp((qa - m) / alpha);
                    v = alpha * std::log(e) + m;
                    break;
                }
            }
            tables.insert(s, t, v, std::move(q));
        }
    }
    return tables;
}

}  // namespace

ValueTables value_iterate(const MdpModel& mdp) {
    return backward_induction(mdp, Combine::max_only, 0.0);
}

ValueTables soft_value_iterate(const MdpModel& mdp, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("soft_value_iterate: alpha must be > 0");
    return backward_induction(mdp, Combine::soft, alpha);
}

ValueTables minimax_solve(const MdpModel& game) {
    return backward_induction(game, Combine::by_role, 0.0);
}

double delta_gap(const ValueTables& tables) {
    double gap = std::numeric_limits<double>::infinity();
    for (const auto& e : tables.entries()) {
        for (std::size_t i = 0; i < e.q.size(); ++i) {
            for (std::size_t j = i + 1; j < e.q.size(); ++j) {
                const double d = std::abs(e.q[i] - e.q[j]);
                if (d > 0.0 && d < gap) gap = d;
            }
        }
    }
    return gap;
}

}  // namespace bmcts
