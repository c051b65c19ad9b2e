#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bench.hpp"
#include "experiment.hpp"
#include "oracle_dump.hpp"

using namespace bmcts;
using namespace bmcts::tools;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path temp_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("bmcts_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

const char* kSmallConfig = R"({
  "environment": {"name": "dchain", "D": 6, "final_reward": 0.5},
  "algorithms": [
    {"name": "ments", "alpha": 1.0, "epsilon": 1.0},
    {"name": "bts", "alpha": 1.0, "epsilon": 1.0}
  ],
  "seeds": [1, 2],
  "trials": 400,
  "checkpoint_every": 100,
  "eval_trajectories": 50,
  "deterministic_timing": true,
  "output": "small.csv"
})";

}  // namespace

TEST_CASE("experiment configs parse with defaults and validate fields") {
    auto cfg = parse_experiment_config(
        R"({"environment": {"name": "tictactoe"}, "algorithms": [{"name": "uct"}]})");
    CHECK(cfg.trials == 10000);
    CHECK(cfg.checkpoint_every == 250);
    CHECK(cfg.eval_trajectories == 250);
    CHECK(cfg.seeds == std::vector<std::uint64_t>{1});
    CHECK(cfg.algorithms.size() == 1);
    CHECK(cfg.algorithms[0].label == "uct");

    // seed ranges expand
    auto ranged = parse_experiment_config(
        R"({"environment": {"name": "tictactoe"}, "algorithms": [{"name": "bts"}],
            "seeds": {"count": 3, "base": 10}})");
    CHECK(ranged.seeds == std::vector<std::uint64_t>{10, 11, 12});
}

TEST_CASE("experiment config errors carry a field diagnostic") {
    CHECK_THROWS_WITH_AS(parse_experiment_config(R"({"algorithms": [{"name": "uct"}]})"),
                         doctest::Contains("environment"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_experiment_config(R"({"environment": {"name": "nope"}, "algorithms": []})"),
        doctest::Contains("environment.name"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_experiment_config(
            R"({"environment": {"name": "tictactoe"}, "algorithms": [{"name": "zzz"}]})"),
        doctest::Contains("algorithms[].name"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_experiment_config(
            R"({"environment": {"name": "tictactoe"},
                "algorithms": [{"name": "bts", "backup": "weird"}]})"),
        doctest::Contains("backup"), std::invalid_argument);
    // JSON syntax errors surface the parser position
    CHECK_THROWS_WITH_AS(parse_experiment_config("{ nope"), doctest::Contains("parse error"),
                         std::invalid_argument);
}

TEST_CASE("run_experiments writes the versioned schema and one row per checkpoint") {
    auto cfg = parse_experiment_config(kSmallConfig);
    const fs::path dir = temp_dir("rows");
    const RunResult result = run_experiments(cfg, dir.string());

    const std::string text = slurp(result.csv_path);
    std::istringstream lines(text);
    std::string line;
    std::getline(lines, line);
    CHECK(line == kCsvSchemaHeader);
    std::getline(lines, line);
    CHECK(line == kCsvColumnHeader);
    int rows = 0;
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 2 * 2 * 4);  // algorithms x seeds x checkpoints

    CHECK(fs::exists(result.resolved_config_path));
    const std::string resolved = slurp(result.resolved_config_path);
    CHECK(resolved.find("\"trials\": 400") != std::string::npos);
}

TEST_CASE("identical configs produce byte-identical results") {
    auto cfg = parse_experiment_config(kSmallConfig);
    const fs::path dir_a = temp_dir("det_a");
    const fs::path dir_b = temp_dir("det_b");
    const RunResult a = run_experiments(cfg, dir_a.string());
    const RunResult b = run_experiments(cfg, dir_b.string());
    CHECK(slurp(a.csv_path) == slurp(b.csv_path));

    // parallel execution must not change the bytes either
    auto par = cfg;
    par.parallelism = 4;
    const fs::path dir_c = temp_dir("det_c");
    const RunResult c = run_experiments(par, dir_c.string());
    CHECK(slurp(a.csv_path) == slurp(c.csv_path));
}

TEST_CASE("the shipped gridworld config runs end to end") {
    const fs::path config = fs::path(BMCTS_SOURCE_DIR) / "tools" / "configs" / "frozen_lake.json";
    auto cfg = load_experiment_config(config.string());
    CHECK(cfg.algorithms.size() == 4);
    // shrink the budget: this is a smoke test, not an experiment
    cfg.trials = 100;
    cfg.checkpoint_every = 50;
    cfg.eval_trajectories = 20;
    cfg.seeds = {1};
    const fs::path dir = temp_dir("shipped");
    const RunResult result = run_experiments(cfg, dir.string());
    CHECK(result.reports.size() == 4);
    for (const auto& report : result.reports) CHECK(report.checkpoints.size() == 2);
}

TEST_CASE("oracle dumps carry the expected root values") {
    const auto soft = dump_oracle(*make_environment(json{{"name", "dchain"},
                                                         {"D", 10},
                                                         {"final_reward", 0.5}}),
                                  "soft", 1.0);
    CHECK(soft.find("2.74258767") != std::string::npos);

    const auto standard =
        dump_oracle(*make_environment(json{{"name", "dchain"}, {"D", 10}}), "standard");
    // the root line: state 1 at t 0 has value 1 (the final reward wins)
    CHECK(standard.find("\n1 0 1 0.9 1\n") != std::string::npos);

    const auto minimax = dump_oracle(*make_environment(json{{"name", "tictactoe"}}), "minimax");
    std::istringstream lines(minimax);
    std::string line;
    bool found_root = false;
    while (std::getline(lines, line)) {
        if (line.rfind("0 0 ", 0) == 0) {
            found_root = true;
            std::istringstream fields(line);
            StateId state;
            int t;
            double v;
            fields >> state >> t >> v;
            CHECK(v == 0.0);
        }
    }
    CHECK(found_root);

    CHECK_THROWS_AS(dump_oracle(*make_environment(json{{"name", "tictactoe"}}), "nope"),
                    std::invalid_argument);
}

TEST_CASE("environment catalog lists every registered factory") {
    const auto catalog = environment_catalog();
    CHECK(catalog.size() == 7);
    for (const auto& info : catalog) {
        json spec{{"name", info.name}};
        CHECK(make_environment(spec) != nullptr);
    }
}

TEST_CASE("bench reports contain every mode and computable ratios") {
    const auto report = bench_sampling({4}, 2000);
    CHECK(report.rows.size() == 4);
    CHECK(report.ratio("alias_on", "alias_off", 4) > 0.0);
    CHECK(report.ratio("backup_fast", "backup_naive", 4) > 0.0);
    CHECK_THROWS_AS(report.ratio("alias_on", "alias_off", 99), std::invalid_argument);
    const std::string csv = report.to_csv();
    CHECK(csv.find("mode,branching,trials,elapsed_ns,trials_per_sec") != std::string::npos);

    // two actions: the table buys little, the ratio is reported but not judged
    const auto tiny = bench_sampling({2}, 2000);
    MESSAGE("alias on/off ratio at branching 2: ", tiny.ratio("alias_on", "alias_off", 2));
}

TEST_CASE("the resolved config round-trips through the parser") {
    auto cfg = parse_experiment_config(kSmallConfig);
    const json first = cfg.resolved();
    auto reparsed = parse_experiment_config(first.dump());
    CHECK(reparsed.resolved() == first);
}

TEST_CASE("the installed binary honors exit codes") {
    const std::string cli = BMCTS_CLI_PATH;
    CHECK(std::system((cli + " list-envs > /dev/null").c_str()) == 0);
    CHECK(std::system((cli + " run --config /nonexistent.json 2> /dev/null").c_str()) != 0);
}
