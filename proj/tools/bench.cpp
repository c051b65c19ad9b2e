#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "bmcts/alias.hpp"
#include "bmcts/env/wide_tree.hpp"
#include "bmcts/search.hpp"

namespace bmcts::tools {

namespace {

std::int64_t time_trials(const MdpModel& mdp, const AlgorithmConfig& cfg, std::int64_t trials,
                         std::uint64_t seed) {
    SearchTree tree(mdp, cfg, RandomStream(seed));
    const auto t0 = std::chrono::steady_clock::now();
    tree.run_trials(trials);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
}

}  // namespace

double SamplingBenchReport::ratio(const std::string& mode_num, const std::string& mode_den,
                                  int branching) const {
    double num = 0.0, den = 0.0;
    for (const auto& row : rows) {
        if (row.branching != branching) continue;
        if (row.mode == mode_num) num = row.trials_per_sec;
        if (row.mode == mode_den) den = row.trials_per_sec;
    }
    if (num == 0.0 || den == 0.0)
        throw std::invalid_argument("SamplingBenchReport::ratio: missing mode or branching");
    return num / den;
}

std::string SamplingBenchReport::to_csv() const {
    std::string out = "# bmcts sampling bench schema v1\nmode,branching,trials,elapsed_ns,trials_per_sec\n";
    char buf[160];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof(buf), "%s,%d,%lld,%lld,%.9g\n", row.mode.c_str(), row.branching,
                      static_cast<long long>(row.trials), static_cast<long long>(row.elapsed_ns),
                      row.trials_per_sec);
        out += buf;
    }
    return out;
}

SamplingBenchReport bench_sampling(const std::vector<int>& branching_factors,
                                   std::int64_t trials_per_config, std::uint64_t seed) {
    SamplingBenchReport report;
    for (int branching : branching_factors) {
        if (branching < 2) throw std::invalid_argument("bench_sampling: branching must be >= 2");
        const auto mdp = env::make_wide_tree(branching, 2, seed);

        AlgorithmConfig bts;
        bts.algorithm = Algorithm::bts;
        bts.alpha = 0.2;
        bts.epsilon = 1.0;

        struct ModeSpec {
            const char* name;
            bool alias;
            BackupMode backup;
        };
        const ModeSpec modes[] = {
            {"alias_on", true, BackupMode::fast},
            {"alias_off", false, BackupMode::fast},
            {"backup_fast", true, BackupMode::fast},
            {"backup_naive", true, BackupMode::naive},
        };
        for (const ModeSpec& mode : modes) {
            AlgorithmConfig cfg = bts;
            cfg.use_alias = mode.alias;
            cfg.backup = mode.backup;
            // Warm-up pass, then the timed pass; the median of three keeps
            // scheduler noise out of the ratios.
            time_trials(*mdp, cfg, trials_per_config / 4 + 1, seed);
            std::int64_t best = 0;
            std::vector<std::int64_t> times;
            for (int rep = 0; rep < 3; ++rep)
                times.push_back(time_trials(*mdp, cfg, trials_per_config, seed + rep));
            std::sort(times.begin(), times.end());
            best = times[1];
            report.rows.push_back({mode.name, branching, trials_per_config, best,
                                   static_cast<double>(trials_per_config) * 1e9 /
                                       static_cast<double>(best)});
        }
    }
    return report;
}

double bench_alias_draw_ns(std::size_t m, std::int64_t draws, int reps, std::uint64_t seed) {
    RandomStream rng(seed);
    std::vector<double> weights(m);
    for (double& w : weights) w = 0.05 + rng.uniform();
    const AliasTable table = alias_build(weights);

    std::vector<double> per_draw;
    volatile std::size_t sink = 0;  // keeps the sampling loop live
    for (int rep = 0; rep < reps; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        for (std::int64_t i = 0; i < draws; ++i) sink = sink + alias_sample(table, rng);
        const auto t1 = std::chrono::steady_clock::now();
        per_draw.push_back(
            static_cast<double>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()) /
            static_cast<double>(draws));
    }
    std::sort(per_draw.begin(), per_draw.end());
    return per_draw[per_draw.size() / 2];
}

}  // namespace bmcts::tools
