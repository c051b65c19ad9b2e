#include "bmcts/mdp.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace bmcts {

StateId MdpModel::sample_successor(StateId s, int action, double u) const {
    std::vector<Transition> ts;
    transitions(s, action, ts);
    double acc = 0.0;
    for (const Transition& t : ts) {
        acc += t.prob;
        if (u < acc) return t.next;
    }
    return ts.back().next;  // guards against u landing on accumulated round-off
}

void check_mdp(const MdpModel& mdp, double tol) {
    std::unordered_set<StateId> seen;
    std::vector<StateId> frontier{mdp.initial_state()};
    seen.insert(mdp.initial_state());
    std::vector<Transition> ts;

    while (!frontier.empty()) {
        StateId s = frontier.back();
        frontier.pop_back();
        const int actions = mdp.num_actions(s);
        for (int a = 0; a < actions; ++a) {
            ts.clear();
            mdp.transitions(s, a, ts);
            if (ts.empty())
                throw std::runtime_error("check_mdp: empty successor list at a non-terminal state");
            double sum = 0.0;
            for (const Transition& t : ts) {
                if (t.prob < 0.0)
                    throw std::runtime_error("check_mdp: negative transition probability");
                sum += t.prob;
                if (seen.insert(t.next).second) frontier.push_back(t.next);
            }
            if (std::abs(sum - 1.0) > tol)
                throw std::runtime_error("check_mdp: successor probabilities do not sum to 1");
        }
    }
}

}  // namespace bmcts
