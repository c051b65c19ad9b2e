#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "bench.hpp"
#include "bmcts/backup.hpp"
#include "bmcts/dp.hpp"
#include "bmcts/env/ar_chain.hpp"
#include "bmcts/env/dchain.hpp"
#include "bmcts/env/random_mdp.hpp"
#include "bmcts/env/tictactoe.hpp"
#include "bmcts/eval.hpp"
#include "bmcts/policies.hpp"
#include "bmcts/search.hpp"
#include "support/stats.hpp"

using namespace bmcts;

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void report(int criterion, bool ok, const std::string& details, double seconds) {
    std::printf("[criterion %2d] %s  (%.1fs)  %s\n", criterion, ok ? "PASS" : "FAIL", seconds,
                details.c_str());
    std::fflush(stdout);
}

AlgorithmConfig algo_config(Algorithm algorithm, double alpha, double epsilon) {
    AlgorithmConfig cfg;
    cfg.algorithm = algorithm;
    cfg.alpha = alpha;
    cfg.epsilon = epsilon;
    return cfg;
}

double evaluate_tree(const SearchTree& tree, const MdpModel& mdp, std::int64_t n,
                     std::uint64_t seed) {
    RandomStream rng(seed);
    return evaluate_policy(complete_policy(tree), mdp, n, rng).mean;
}

}  // namespace

TEST_CASE("criterion 1: closed-form soft value of the modified 10-chain") {
    Stopwatch watch;
    auto chain = env::make_dchain({10, 0.5});
    auto tables = soft_value_iterate(*chain, 1.0);
    double expsum = std::exp(0.5);
    for (int i = 0; i <= 8; ++i) expsum += std::exp(i / 10.0);
    const double expected = std::log(expsum);
    const double got = tables.q_values(1, 0)[env::kDChainAdvance];
    const bool close = std::abs(got - expected) < 1e-9;
    const bool rounds = std::round(got * 100.0) / 100.0 == 2.74;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "soft Q at the root advance arm = %.9f (target %.9f)", got,
                  expected);
    const bool ok = close && rounds && watch.seconds() < 1.0;
    report(1, ok, buf, watch.seconds());
    CHECK(close);
    CHECK(rounds);
    CHECK(watch.seconds() < 1.0);
}

TEST_CASE("criterion 2: ments is inconsistent on the modified 10-chain, bts and dents are not") {
    Stopwatch watch;
    auto chain = env::make_dchain({10, 0.5});
    const int seeds = 25, trials = 10000;
    int ments_wrong = 0, bts_right = 0, dents_right = 0;
    for (int seed = 1; seed <= seeds; ++seed) {
        SearchTree ments(*chain, algo_config(Algorithm::ments, 1.0, 1.0), RandomStream(seed));
        ments.run_trials(trials);
        if (ments.recommend_root() == env::kDChainAdvance &&
            evaluate_tree(ments, *chain, 50, 900 + seed) == doctest::Approx(0.5))
            ++ments_wrong;

        SearchTree bts(*chain, algo_config(Algorithm::bts, 1.0, 1.0), RandomStream(seed));
        bts.run_trials(trials);
        bts_right += bts.recommend_root() == env::kDChainExit;

        AlgorithmConfig dents_cfg = algo_config(Algorithm::dents, 1.0, 1.0);
        dents_cfg.beta = Schedule::inverse_log(1.0);
        SearchTree dents(*chain, dents_cfg, RandomStream(seed));
        dents.run_trials(trials);
        dents_right += dents.recommend_root() == env::kDChainExit;
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "ments picked the soft arm (value 0.5) %d/25, bts kept 0.9 %d/25, dents %d/25",
                  ments_wrong, bts_right, dents_right);
    const bool ok = ments_wrong >= 23 && bts_right >= 23 && dents_right >= 23 &&
                    watch.seconds() < 120.0;
    report(2, ok, buf, watch.seconds());
    CHECK(ments_wrong >= 23);
    CHECK(bts_right >= 23);
    CHECK(dents_right >= 23);
    CHECK(watch.seconds() < 120.0);
}

TEST_CASE("criterion 3: uct stalls at 0.9 on the 10-chain while ments reaches 1.0") {
    Stopwatch watch;
    auto chain = env::make_dchain({10, 1.0});
    const int seeds = 25, trials = 10000;
    int uct_stuck = 0, ments_solved = 0;
    for (int seed = 1; seed <= seeds; ++seed) {
        AlgorithmConfig uct_cfg;
        uct_cfg.algorithm = Algorithm::uct;
        uct_cfg.uct_c = 1.0;
        SearchTree uct(*chain, uct_cfg, RandomStream(seed));
        uct.run_trials(trials);
        uct_stuck += evaluate_tree(uct, *chain, 50, 300 + seed) <= 0.9;

        SearchTree ments(*chain, algo_config(Algorithm::ments, 1.0, 1.0), RandomStream(seed));
        ments.run_trials(trials);
        ments_solved += evaluate_tree(ments, *chain, 50, 600 + seed) == 1.0;
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "uct <= 0.9 in %d/25 seeds, ments reached 1.0 in %d/25",
                  uct_stuck, ments_solved);
    const bool ok = uct_stuck >= 23 && ments_solved >= 23 && watch.seconds() < 120.0;
    report(3, ok, buf, watch.seconds());
    CHECK(uct_stuck >= 23);
    CHECK(ments_solved >= 23);
    CHECK(watch.seconds() < 120.0);
}

TEST_CASE("criterion 4: bts and dents converge on seeded random MDPs") {
    Stopwatch watch;
    const int cells = 20;
    const std::int64_t trials = 200000;
    int bts_ok = 0, dents_ok = 0;
    for (int seed = 1; seed <= cells; ++seed) {
        env::RandomMdpSpec spec;
        spec.num_states = 8 + seed % 13;  // at most 20
        spec.num_actions = 2 + seed % 3;  // at most 4
        spec.horizon = 3 + seed % 3;      // at most 5
        spec.seed = static_cast<std::uint64_t>(seed);
        auto mdp = env::make_random_mdp(spec);
        auto tables = value_iterate(*mdp);
        const double vstar = tables.value(mdp->initial_state(), 0);
        auto q = tables.q_values(mdp->initial_state(), 0);
        const double qmax = *std::max_element(q.begin(), q.end());

        for (int which = 0; which < 2; ++which) {
            AlgorithmConfig cfg =
                algo_config(which == 0 ? Algorithm::bts : Algorithm::dents, 0.5, 2.0);
            cfg.beta = Schedule::inverse_log(1.0);
            SearchTree tree(*mdp, cfg, RandomStream(1000 + seed));
            tree.run_trials(trials);
            const bool value_ok = std::abs(tree.root().v_bellman - vstar) < 0.05;
            const bool rec_ok = q[tree.recommend_root()] == qmax;
            if (value_ok && rec_ok) ++(which == 0 ? bts_ok : dents_ok);
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "bts converged in %d/20 cells, dents in %d/20", bts_ok,
                  dents_ok);
    const bool ok = bts_ok >= 19 && dents_ok >= 19 && watch.seconds() < 300.0;
    report(4, ok, buf, watch.seconds());
    CHECK(bts_ok >= 19);
    CHECK(dents_ok >= 19);
    CHECK(watch.seconds() < 300.0);
}

TEST_CASE("criterion 5: the average-return counterexample") {
    Stopwatch watch;
    const int d = 10;
    auto mdp = env::make_ar_counterexample({d});
    const int seeds = 20;
    const std::int64_t trials = 500000;
    const double e2 = std::exp(2.0);
    const double bound = 2.0 * std::pow(e2 / (1.0 + e2), d - 1);

    double entry_value_sum = 0.0;
    int fixed_suboptimal = 0, decayed_optimal = 0;
    for (int seed = 1; seed <= seeds; ++seed) {
        AlgorithmConfig fixed;
        fixed.algorithm = Algorithm::ar_bts;
        fixed.alpha_schedule = Schedule::constant(1.0);
        fixed.epsilon = 1.0;
        SearchTree tree(*mdp, fixed, RandomStream(seed));
        tree.run_trials(trials);
        const SearchNode* entry = tree.root().actions[env::kArChainEnter].child(2);
        entry_value_sum += entry ? entry->v_avg : 0.0;
        fixed_suboptimal += tree.recommend_root() == env::kArTakeOne;

        AlgorithmConfig decayed = fixed;
        decayed.alpha_schedule = Schedule::inverse_sqrt(1.0);
        SearchTree flipped(*mdp, decayed, RandomStream(seed));
        flipped.run_trials(trials);
        decayed_optimal += flipped.recommend_root() == env::kArChainEnter;
    }
    const double entry_mean = entry_value_sum / seeds;
    const bool value_matches_bound = std::abs(entry_mean - bound) < 0.05;
    const bool value_stays_below_one = entry_mean < 1.0 && entry_mean <= bound + 0.05;
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "fixed-alpha entry average %.4f vs stated limit %.4f (within 0.05: %s; "
                  "below the bound and below 1: %s); suboptimal rec %d/20, decayed-alpha "
                  "optimal rec %d/20",
                  entry_mean, bound, value_matches_bound ? "yes" : "no",
                  value_stays_below_one ? "yes" : "no", fixed_suboptimal, decayed_optimal);
    const bool ok = value_matches_bound && fixed_suboptimal >= 18 && decayed_optimal >= 18 &&
                    watch.seconds() < 300.0;
    report(5, ok, buf, watch.seconds());
    // The stated target is an upper bound on the entry value, not its fixed
    // point: each gate continues with probability sigma(Q) for a Q strictly
    // below 2, which compounds the average below the bound. The two-sided
    // check is kept as stated and is expected to fail; the README covers the
    // analysis and the one-gate chain where the target is exact.
    CHECK(value_matches_bound);
    CHECK(value_stays_below_one);
    CHECK(fixed_suboptimal >= 18);
    CHECK(decayed_optimal >= 18);
    CHECK(watch.seconds() < 300.0);
}

namespace {

double max_backup_divergence(const MdpModel& mdp, Algorithm algorithm, std::int64_t trials,
                             std::uint64_t seed) {
    AlgorithmConfig cfg = algo_config(algorithm, 0.5, 1.0);
    cfg.beta = Schedule::inverse_log(1.0);
    cfg.alpha_schedule = Schedule::inverse_sqrt(1.0);
    cfg.backup = BackupMode::fast;
    const bool bellman = algorithm == Algorithm::bts || algorithm == Algorithm::dents;
    const bool entropy = cfg.uses_entropy();
    SearchTree tree(mdp, cfg, RandomStream(seed));
    double max_diff = 0.0;
    for (std::int64_t i = 0; i < trials; ++i) {
        Trajectory traj = tree.run_trial();
        for (const TrialStep& step : traj.steps) {
            SearchNode& node = *step.node;
            const int a = step.action;
            if (bellman) {
                max_diff = std::max(max_diff, std::abs(node.actions[a].q_bellman -
                                                       recompute_q_bellman(node, a, step.reward)));
                max_diff = std::max(max_diff, std::abs(node.v_bellman - recompute_v_bellman(node)));
            }
            if (algorithm == Algorithm::ments) {
                max_diff = std::max(max_diff, std::abs(node.actions[a].q_soft -
                                                       recompute_q_soft(node, a, step.reward)));
                max_diff =
                    std::max(max_diff, std::abs(node.v_soft - recompute_v_soft(node, cfg.alpha)));
            }
            if (entropy) {
                max_diff =
                    std::max(max_diff, std::abs(node.actions[a].h_q - recompute_h_q(node, a)));
                max_diff = std::max(
                    max_diff, std::abs(node.h_v - recompute_h_v(node, node.entropy_policy)));
            }
        }
    }
    return max_diff;
}

// Average-return algorithms have no fast/naive split in their value updates;
// both modes must produce the identical tree.
bool modes_coincide(const MdpModel& mdp, Algorithm algorithm, std::int64_t trials,
                    std::uint64_t seed) {
    AlgorithmConfig fast = algo_config(algorithm, 0.5, 1.0);
    fast.alpha_schedule = Schedule::inverse_sqrt(1.0);
    fast.backup = BackupMode::fast;
    AlgorithmConfig naive = fast;
    naive.backup = BackupMode::naive;
    SearchTree a(mdp, fast, RandomStream(seed));
    SearchTree b(mdp, naive, RandomStream(seed));
    a.run_trials(trials);
    b.run_trials(trials);
    if (a.root().visits != b.root().visits) return false;
    for (int i = 0; i < a.root().num_actions(); ++i) {
        if (a.root().actions[i].q_avg != b.root().actions[i].q_avg) return false;
        if (a.root().actions[i].count != b.root().actions[i].count) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("criterion 6: fast backups agree with the naive definitions on a stochastic MDP") {
    Stopwatch watch;
    env::RandomMdpSpec spec{12, 4, 5, 77};
    auto mdp = env::make_random_mdp(spec);
    const double bts_diff = max_backup_divergence(*mdp, Algorithm::bts, 10000, 1);
    const double ments_diff = max_backup_divergence(*mdp, Algorithm::ments, 10000, 2);
    const double dents_diff = max_backup_divergence(*mdp, Algorithm::dents, 10000, 3);
    const double ar_dents_diff = max_backup_divergence(*mdp, Algorithm::ar_dents, 10000, 4);
    const double ar_ments_diff = max_backup_divergence(*mdp, Algorithm::ar_ments, 10000, 5);
    // the pure running-mean algorithms have nothing to optimize: both modes
    // must yield the identical tree
    const bool ar_same = modes_coincide(*mdp, Algorithm::ar_bts, 5000, 6) &&
                         modes_coincide(*mdp, Algorithm::uct, 5000, 7);
    const double worst = std::max({bts_diff, ments_diff, dents_diff, ar_dents_diff,
                                   ar_ments_diff});
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "max divergence: bellman %.2e, soft %.2e, entropy %.2e/%.2e/%.2e; "
                  "running-mean modes identical: %s",
                  bts_diff, ments_diff, dents_diff, ar_dents_diff, ar_ments_diff,
                  ar_same ? "yes" : "no");
    const bool ok = worst < 1e-9 && ar_same && watch.seconds() < 60.0;
    report(6, ok, buf, watch.seconds());
    CHECK(worst < 1e-9);
    CHECK(ar_same);
    CHECK(watch.seconds() < 60.0);
}

TEST_CASE("criterion 7: alias sampler correctness") {
    Stopwatch watch;
    RandomStream rng(123);

    bool accounting_ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t m = 2 + rng.uniform_index(127);
        std::vector<double> w(m);
        double total = 0.0;
        for (double& x : w) {
            x = rng.uniform();
            total += x;
        }
        auto t = alias_build(w);
        for (std::size_t i = 0; i < m; ++i) {
            double p = t.thresholds[i];
            for (std::size_t j = 0; j < m; ++j)
                if (j != i && t.aliases[j] == i) p += 1.0 - t.thresholds[j];
            p /= static_cast<double>(m);
            accounting_ok &= std::abs(p - w[i] / total) < 1e-12;
        }
    }

    int gof_pass = 0;
    const int dists = 100;
    for (int dist = 0; dist < dists; ++dist) {
        const std::size_t m = 2 + rng.uniform_index(31);
        std::vector<double> w(m);
        double total = 0.0;
        for (double& x : w) {
            x = 0.05 + rng.uniform();
            total += x;
        }
        auto t = alias_build(w);
        std::vector<std::int64_t> counts(m, 0);
        const std::int64_t n = 100000;
        for (std::int64_t i = 0; i < n; ++i) counts[alias_sample(t, rng)]++;
        std::vector<double> probs(m);
        for (std::size_t i = 0; i < m; ++i) probs[i] = w[i] / total;
        gof_pass += teststats::chi_square_gof_p(counts, probs, n) > 0.001;
    }

    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "accounting identity %s on 1000 vectors; chi-square passed %d/100",
                  accounting_ok ? "exact" : "violated", gof_pass);
    const bool ok = accounting_ok && gof_pass == dists && watch.seconds() < 60.0;
    report(7, ok, buf, watch.seconds());
    CHECK(accounting_ok);
    CHECK(gof_pass == dists);
    CHECK(watch.seconds() < 60.0);
}

TEST_CASE("criterion 8: alias sampling pays off as the action count grows") {
    Stopwatch watch;
    const auto bench = tools::bench_sampling({16, 64, 256}, 30000);
    const double r16 = bench.ratio("alias_on", "alias_off", 16);
    const double r64 = bench.ratio("alias_on", "alias_off", 64);
    const double r256 = bench.ratio("alias_on", "alias_off", 256);
    const double fast128 =
        tools::bench_sampling({128}, 30000).ratio("backup_fast", "backup_naive", 128);

    const double ns16 = tools::bench_alias_draw_ns(16, 5000000, 5);
    const double ns4096 = tools::bench_alias_draw_ns(4096, 5000000, 5);
    const double draw_ratio = ns4096 / ns16;

    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "alias on/off speedup: %.2fx@16 %.2fx@64 %.2fx@256; fast/naive backup "
                  "%.2fx@128; per-draw %.1fns@16 %.1fns@4096 (ratio %.2f)",
                  r16, r64, r256, fast128, ns16, ns4096, draw_ratio);
    const bool ok = r64 > 1.0 && r64 > r16 && r256 > r64 && fast128 > 1.0 && draw_ratio < 3.0 &&
                    watch.seconds() < 180.0;
    report(8, ok, buf, watch.seconds());
    CHECK(r64 > 1.0);
    CHECK(r64 > r16);
    CHECK(r256 > r64);
    CHECK(fast128 > 1.0);
    CHECK(draw_ratio < 3.0);
    CHECK(watch.seconds() < 180.0);
}

TEST_CASE("criterion 9: dents with beta = alpha reproduces the ments policy") {
    Stopwatch watch;
    RandomStream rng(31);
    double max_diff = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int a = 2 + static_cast<int>(rng.uniform_index(5));
        const double alpha = 0.05 + rng.uniform();
        SearchNode dents_node, ments_node;
        dents_node.actions.resize(a);
        ments_node.actions.resize(a);
        dents_node.visits = ments_node.visits = static_cast<std::int64_t>(rng.uniform_index(100));
        for (int i = 0; i < a; ++i) {
            const double q = 6.0 * (rng.uniform() - 0.5);
            const double h = 2.5 * rng.uniform();
            dents_node.actions[i].q_bellman = q;
            dents_node.actions[i].h_q = h;
            ments_node.actions[i].q_soft = q + alpha * h;
        }
        AlgorithmConfig dcfg = algo_config(Algorithm::dents, alpha, 0.7);
        dcfg.beta = Schedule::constant(alpha);
        AlgorithmConfig mcfg = algo_config(Algorithm::ments, alpha, 0.7);
        auto pd = search_policy(dents_node, dcfg);
        auto pm = search_policy(ments_node, mcfg);
        for (int i = 0; i < a; ++i) max_diff = std::max(max_diff, std::abs(pd[i] - pm[i]));
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "max policy divergence %.2e over 1000 table states", max_diff);
    const bool ok = max_diff < 1e-9 && watch.seconds() < 10.0;
    report(9, ok, buf, watch.seconds());
    CHECK(max_diff < 1e-9);
    CHECK(watch.seconds() < 10.0);
}

TEST_CASE("criterion 10: the opponent transform recommends drawing openings") {
    Stopwatch watch;
    auto game = env::make_tictactoe();
    auto oracle = minimax_solve(*game);
    auto root_q = oracle.q_values(game->initial_state(), 0);
    const int seeds = 20;
    const std::int64_t trials = 50000;
    int bts_ok = 0, ments_ok = 0, dents_ok = 0;
    for (int seed = 1; seed <= seeds; ++seed) {
        for (Algorithm algorithm : {Algorithm::bts, Algorithm::ments, Algorithm::dents}) {
            AlgorithmConfig cfg = algo_config(algorithm, 0.5, 1.0);
            cfg.beta = Schedule::inverse_log(1.0);
            SearchTree tree(*game, cfg, RandomStream(seed));
            tree.run_trials(trials);
            const bool drawing = root_q[tree.recommend_root()] == 0.0;
            if (algorithm == Algorithm::bts) bts_ok += drawing;
            if (algorithm == Algorithm::ments) ments_ok += drawing;
            if (algorithm == Algorithm::dents) dents_ok += drawing;
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "drawing first move: bts %d/20, ments %d/20, dents %d/20", bts_ok, ments_ok,
                  dents_ok);
    const bool ok =
        bts_ok >= 18 && ments_ok >= 18 && dents_ok >= 18 && watch.seconds() < 120.0;
    report(10, ok, buf, watch.seconds());
    CHECK(bts_ok >= 18);
    CHECK(ments_ok >= 18);
    CHECK(dents_ok >= 18);
    CHECK(watch.seconds() < 120.0);
}
