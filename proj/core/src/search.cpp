#include "bmcts/search.hpp"

#include <cmath>
#include <stdexcept>

#include "bmcts/backup.hpp"
#include "bmcts/policies.hpp"

namespace bmcts {

SearchTree::SearchTree(const MdpModel& mdp, AlgorithmConfig cfg, RandomStream rng)
    : mdp_(&mdp), cfg_(std::move(cfg)), rng_(rng) {
    cfg_.validate();
    root_ = make_node(mdp.initial_state(), 0);
    root_->visits = 0;  // the root has no creation visit; it counts trials
    nodes_ = 1;
}

double SearchTree::rollout_value(StateId state, int depth) {
    double total = 0.0;
    StateId s = state;
    for (int t = depth; t < mdp_->horizon(); ++t) {
        const int actions = mdp_->num_actions(s);
        if (actions == 0) break;
        const int a = static_cast<int>(rng_.uniform_index(actions));
        total += mdp_->reward(s, a);
        s = mdp_->sample_successor(s, a, rng_.uniform());
    }
    return total;
}

std::unique_ptr<SearchNode> SearchTree::make_node(StateId state, int depth) {
    auto node = std::make_unique<SearchNode>();
    node->state = state;
    node->depth = depth;
    node->sign = opponent_transform(mdp_->agent_role(state)).sign;
    node->visits = 1;  // creation visit

    // Nodes at the horizon keep their initialization value but never act.
    const bool env_terminal = mdp_->num_actions(state) == 0;
    const int actions = depth >= mdp_->horizon() || env_terminal ? 0 : mdp_->num_actions(state);

    double init = cfg_.v_init;
    if (env_terminal) {
        init = 0.0;  // no return remains past an absorbing state
    } else if (cfg_.rollout_init) {
        init = rollout_value(state, depth);
    }
    node->init_value = init;
    node->v_bellman = node->v_soft = node->v_avg = init;
    node->v_bellman_prev = node->v_soft_prev = init;

    if (actions > 0) {
        node->actions.resize(actions);
        std::vector<double> keys(actions, node->sign * cfg_.q_init);
        for (ActionStats& as : node->actions) {
            as.q_bellman = as.q_soft = as.q_avg = cfg_.q_init;
        }
        node->bellman_heap = IndexedMaxHeap(keys);
        node->soft_heap = IndexedMaxHeap(keys);
        node->soft_max = node->sign * cfg_.q_init;
        node->soft_expsum = static_cast<double>(actions);

        if (cfg_.algorithm != Algorithm::uct) {
            node->sampling_policy = search_policy(*node, cfg_);
            node->alias_table = alias_build(node->sampling_policy);
            node->entropy_policy = node->sampling_policy;
            node->h_v = node->sign * entropy(node->entropy_policy);
        }
    }
    node->h_v_prev = node->h_v;
    return node;
}

SearchNode& SearchTree::expand(SearchNode& parent, int action, StateId state) {
    ActionStats& as = parent.actions.at(action);
    if (as.child(state) != nullptr) throw std::logic_error("expand: node already in tree");
    as.children.push_back({state, make_node(state, parent.depth + 1)});
    ++nodes_;
    return *as.children.back().node;
}

int SearchTree::select_action(SearchNode& node) {
    if (cfg_.algorithm == Algorithm::uct) return uct_select(node, cfg_.uct_c, rng_);
    if (cfg_.use_alias) return cached_policy_sample(node, cfg_, rng_);
    const std::vector<double> pi = search_policy(node, cfg_);
    return categorical_sample(pi, rng_.uniform());
}

Trajectory SearchTree::run_trial() {
    Trajectory traj;
    SearchNode* node = root_.get();
    while (!node->terminal()) {
        const int action = select_action(*node);
        const double reward = mdp_->reward(node->state, action);
        const StateId next = mdp_->sample_successor(node->state, action, rng_.uniform());
        traj.steps.push_back({node, action, reward});
        SearchNode* child = node->actions[action].child(next);
        if (child == nullptr) {
            node = &expand(*node, action, next);
            traj.expanded = true;
            break;
        }
        node = child;
    }
    traj.leaf = node;
    traj.leaf_value = node->init_value;
    backup(traj);
    ++trials_;
    return traj;
}

void SearchTree::backup(Trajectory& traj) {
    for (TrialStep& step : traj.steps) {
        step.node->visits += 1;
        step.node->actions[step.action].count += 1;
    }
    if (!traj.expanded) traj.leaf->visits += 1;  // fresh leaves carry their creation visit

    const bool fast = cfg_.backup == BackupMode::fast;
    double trial_return = traj.leaf_value;

    for (std::size_t i = traj.steps.size(); i-- > 0;) {
        TrialStep& step = traj.steps[i];
        SearchNode& node = *step.node;
        const SearchNode& child =
            i + 1 < traj.steps.size() ? *traj.steps[i + 1].node : *traj.leaf;
        trial_return += step.reward;

        switch (cfg_.algorithm) {
            case Algorithm::uct:
                average_return_update(node, step.action, trial_return);
                break;
            case Algorithm::ments:
                if (fast)
                    soft_backup_fast(node, step.action, child, step.reward, cfg_.alpha);
                else
                    soft_backup_naive(node, step.action, step.reward, cfg_.alpha);
                break;
            case Algorithm::bts:
            case Algorithm::dents:
                if (fast)
                    bellman_backup_fast(node, step.action, child, step.reward);
                else
                    bellman_backup_naive(node, step.action, step.reward);
                if (cfg_.algorithm == Algorithm::dents) {
                    if (fast)
                        entropy_backup_fast(node, step.action, child, cfg_);
                    else
                        entropy_backup_naive(node, step.action, cfg_);
                }
                break;
            case Algorithm::ar_bts:
            case Algorithm::ar_dents:
            case Algorithm::ar_ments:
                average_return_update(node, step.action, trial_return);
                if (cfg_.algorithm != Algorithm::ar_bts) {
                    if (fast)
                        entropy_backup_fast(node, step.action, child, cfg_);
                    else
                        entropy_backup_naive(node, step.action, cfg_);
                }
                break;
        }
    }
}

int SearchTree::recommend_root() const { return recommend_action(*root_, cfg_); }

const SearchNode* SearchTree::descend(std::span<const std::pair<int, StateId>> path) const {
    const SearchNode* node = root_.get();
    for (const auto& [action, state] : path) {
        if (node == nullptr || action < 0 || action >= node->num_actions()) return nullptr;
        node = node->actions[action].child(state);
    }
    return node;
}

int SearchTree::recommend_at(std::span<const std::pair<int, StateId>> path) const {
    const SearchNode* node = descend(path);
    if (node == nullptr) throw std::out_of_range("recommend_at: state not in tree");
    return recommend_action(*node, cfg_);
}

}  // namespace bmcts
