#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bench.hpp"
#include "experiment.hpp"
#include "oracle_dump.hpp"

namespace {

int cmd_run(const std::string& config_path, const std::string& output_dir,
            std::int64_t seed_override, int parallel_override) {
    using namespace bmcts::tools;
    ExperimentConfig config = load_experiment_config(config_path);
    if (seed_override >= 0) config.seeds = {static_cast<std::uint64_t>(seed_override)};
    if (parallel_override > 0) config.parallelism = parallel_override;

    std::printf("environment: %s\n", config.env_spec.dump().c_str());
    std::printf("cells: %zu algorithms x %zu seeds, %lld trials each\n",
                config.algorithms.size(), config.seeds.size(),
                static_cast<long long>(config.trials));
    const RunResult result = run_experiments(config, output_dir);
    std::printf("wrote %s\n", result.csv_path.c_str());
    std::printf("resolved config: %s\n", result.resolved_config_path.c_str());
    return 0;
}

int cmd_bench(const std::vector<int>& branching, std::int64_t trials,
              const std::string& output_dir) {
    using namespace bmcts::tools;
    const SamplingBenchReport report = bench_sampling(branching, trials);
    const std::string csv = report.to_csv();
    std::fputs(csv.c_str(), stdout);
    for (int a : branching) {
        std::printf("A=%d  alias on/off speedup: %.2fx  fast/naive backup speedup: %.2fx\n", a,
                    report.ratio("alias_on", "alias_off", a),
                    report.ratio("backup_fast", "backup_naive", a));
    }
    if (!output_dir.empty()) {
        std::filesystem::create_directories(output_dir);
        const auto path = std::filesystem::path(output_dir) / "sampling_bench.csv";
        std::ofstream out(path);
        out << csv;
        std::printf("wrote %s\n", path.string().c_str());
    }
    return 0;
}

int cmd_oracle(const std::string& env_json, const std::string& kind, double alpha,
               const std::string& output) {
    using namespace bmcts::tools;
    const auto mdp = make_environment(json::parse(env_json));
    const std::string text = dump_oracle(*mdp, kind, alpha);
    if (output.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot open " + output);
        out << text;
        std::printf("wrote %s\n", output.c_str());
    }
    return 0;
}

int cmd_list_envs() {
    for (const auto& info : bmcts::tools::environment_catalog()) {
        std::printf("%-12s %-40s %s\n", info.name.c_str(),
                    info.parameters.empty() ? "-" : info.parameters.c_str(),
                    info.description.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boltzmann-policy Monte-Carlo tree search benchmark runner"};
    app.require_subcommand(1);

    std::string config_path;
    std::string output_dir = "out";
    std::int64_t seed_override = -1;
    int parallel_override = 0;
    auto* run = app.add_subcommand("run", "run a declarative experiment config");
    run->add_option("-c,--config", config_path, "experiment config (JSON)")->required();
    run->add_option("-o,--output", output_dir, "output directory");
    run->add_option("-s,--seed", seed_override, "override the seed list with a single seed");
    run->add_option("-p,--parallel", parallel_override, "worker pool size for (algorithm, seed) cells");

    std::vector<int> branching{16, 64, 256};
    std::int64_t bench_trials = 20000;
    std::string bench_output;
    auto* bench = app.add_subcommand("bench", "micro-benchmark alias sampling and backups");
    bench->add_option("-A,--branching", branching, "branching factors to benchmark");
    bench->add_option("-n,--trials", bench_trials, "trials per configuration");
    bench->add_option("-o,--output", bench_output, "directory for the timing CSV");

    std::string env_json = R"({"name":"dchain","D":10,"final_reward":0.5})";
    std::string kind = "standard";
    double alpha = 1.0;
    std::string oracle_output;
    auto* oracle = app.add_subcommand("oracle", "dump an exact value table");
    oracle->add_option("-e,--env", env_json, "environment spec (JSON)");
    oracle->add_option("-k,--kind", kind, "standard | soft | minimax");
    oracle->add_option("-a,--alpha", alpha, "temperature for the soft oracle");
    oracle->add_option("-o,--output", oracle_output, "output file (stdout if omitted)");

    app.add_subcommand("list-envs", "list available environments");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path, output_dir, seed_override, parallel_override);
        if (bench->parsed()) return cmd_bench(branching, bench_trials, bench_output);
        if (oracle->parsed()) return cmd_oracle(env_json, kind, alpha, oracle_output);
        return cmd_list_envs();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
