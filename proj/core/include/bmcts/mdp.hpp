#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bmcts {

/// Opaque state identifier minted by each environment.
using StateId = std::int64_t;

struct Transition {
    StateId next;
    double prob;
};

enum class AgentRole { maximizer, minimizer };

/// Finite-horizon MDP. States with no actions are terminal: the episode ends
/// there and all remaining return is zero. Episodes also end after `horizon()`
/// actions. Rewards sit on (state, action) edges.
///
/// Implementations must be immutable after construction; all methods may be
/// called concurrently.
class MdpModel {
public:
    virtual ~MdpModel() = default;

    virtual std::string id() const = 0;
    virtual StateId initial_state() const = 0;
    virtual int horizon() const = 0;

    /// Number of actions available at `s`; 0 means terminal.
    virtual int num_actions(StateId s) const = 0;

    virtual double reward(StateId s, int action) const = 0;

    /// Appends the successor distribution of (s, action) to `out`.
    /// Probabilities are nonnegative and sum to 1.
    virtual void transitions(StateId s, int action, std::vector<Transition>& out) const = 0;

    std::vector<Transition> transitions(StateId s, int action) const {
        std::vector<Transition> out;
        transitions(s, action, out);
        return out;
    }

    /// Samples a successor given a uniform draw u in [0, 1).
    /// The default walks the CDF of `transitions`; deterministic environments
    /// override it to avoid the allocation.
    virtual StateId sample_successor(StateId s, int action, double u) const;

    /// Two-player games mark which side moves at `s`. Single-agent MDPs are
    /// always the maximizer.
    virtual AgentRole agent_role(StateId) const { return AgentRole::maximizer; }
};

/// +1 for maximizer nodes, -1 for minimizer nodes.
inline double role_sign(AgentRole role) {
    return role == AgentRole::maximizer ? 1.0 : -1.0;
}

/// Walks every (state, action) reachable from the initial state and throws
/// std::runtime_error if a successor distribution does not sum to 1 within
/// `tol` or a non-terminal state has an empty successor list.
void check_mdp(const MdpModel& mdp, double tol = 1e-12);

}  // namespace bmcts
