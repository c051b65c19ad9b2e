#include "bmcts/eval.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "bmcts/dp.hpp"

namespace bmcts {

PolicyEstimate evaluate_policy(CompletedPolicy policy, const MdpModel& mdp, std::int64_t n_traj,
                               RandomStream& rng) {
    if (n_traj < 1) throw std::invalid_argument("evaluate_policy: n_traj must be >= 1");
    double sum = 0.0, sum_sq = 0.0;
    for (std::int64_t i = 0; i < n_traj; ++i) {
        policy.reset();
        StateId s = mdp.initial_state();
        double ret = 0.0;
        for (int t = 0; t < mdp.horizon(); ++t) {
            const int actions = mdp.num_actions(s);
            if (actions == 0) break;
            const int a = policy.act(actions, rng);
            ret += mdp.reward(s, a);
            const StateId next = mdp.sample_successor(s, a, rng.uniform());
            policy.advance(a, next);
            s = next;
        }
        sum += ret;
        sum_sq += ret * ret;
    }
    PolicyEstimate est;
    est.mean = sum / static_cast<double>(n_traj);
    if (n_traj > 1) {
        const double var =
            std::max(0.0, (sum_sq - sum * est.mean) / static_cast<double>(n_traj - 1));
        est.std_err = std::sqrt(var / static_cast<double>(n_traj));
    }
    return est;
}

SimpleRegret simple_regret(double estimate, double oracle_value) {
    const double raw = oracle_value - estimate;
    return {raw, std::max(raw, 0.0)};
}

EvalReport run_learning_curve(const MdpModel& mdp, const AlgorithmConfig& cfg,
                              std::int64_t n_total, std::int64_t checkpoint_every,
                              std::int64_t eval_trajectories, std::uint64_t seed) {
    if (n_total < 1 || checkpoint_every < 1 || eval_trajectories < 1)
        throw std::invalid_argument("run_learning_curve: parameters must be positive");

    RandomStream base(seed);
    RandomStream search_rng = base.split(hash_tag("search"));
    RandomStream eval_rng = base.split(hash_tag("eval"));

    EvalReport report;
    report.algorithm = algorithm_name(cfg.algorithm);
    report.env = mdp.id();
    report.seed = seed;
    report.eval_trajectories = eval_trajectories;
    report.oracle_value = value_iterate(mdp).value(mdp.initial_state(), 0);

    SearchTree tree(mdp, cfg, search_rng);
    std::int64_t done = 0;
    std::int64_t search_ns = 0;

    while (done < n_total) {
        const std::int64_t batch = std::min(checkpoint_every, n_total - done);
        const auto t0 = std::chrono::steady_clock::now();
        tree.run_trials(batch);
        const auto t1 = std::chrono::steady_clock::now();
        search_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
        done += batch;

        const PolicyEstimate est =
            evaluate_policy(complete_policy(tree), mdp, eval_trajectories, eval_rng);
        const SimpleRegret reg = simple_regret(est.mean, report.oracle_value);
        Checkpoint cp;
        cp.n_trials = done;
        cp.est_value = est.mean;
        cp.std_err = est.std_err;
        cp.regret_raw = reg.raw;
        cp.regret_clamped = reg.clamped;
        cp.wallclock_ns = search_ns;
        cp.trials_per_sec =
            search_ns > 0 ? static_cast<double>(done) * 1e9 / static_cast<double>(search_ns) : 0.0;
        report.checkpoints.push_back(cp);
    }
    return report;
}

}  // namespace bmcts
