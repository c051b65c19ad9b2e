#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "bmcts/config.hpp"
#include "bmcts/eval.hpp"
#include "bmcts/mdp.hpp"

namespace bmcts::tools {

using nlohmann::json;

/// Environment factory from a JSON spec {"name": ..., parameters...}.
/// Known names and their parameters are listed by `environment_catalog`.
std::unique_ptr<MdpModel> make_environment(const json& spec);

struct EnvironmentInfo {
    std::string name;
    std::string parameters;
    std::string description;
};
std::vector<EnvironmentInfo> environment_catalog();

struct AlgorithmEntry {
    std::string label;  // CSV identifier, defaults to the algorithm name
    AlgorithmConfig config;
};

/// Declarative experiment description, parsed from a JSON config file.
struct ExperimentConfig {
    json env_spec;
    std::vector<AlgorithmEntry> algorithms;
    std::vector<std::uint64_t> seeds;
    std::int64_t trials = 10000;
    std::int64_t checkpoint_every = 250;
    std::int64_t eval_trajectories = 250;
    std::string output = "results.csv";
    bool deterministic_timing = false;  // zero the timing columns for byte-stable output
    int parallelism = 1;

    /// The config with every default expanded, as written next to results.
    json resolved() const;
};

/// Parses and validates a config. Throws std::invalid_argument with a
/// field-path diagnostic on errors; JSON syntax errors carry line/column
/// positions from the parser.
ExperimentConfig parse_experiment_config(const std::string& text);
ExperimentConfig load_experiment_config(const std::string& path);

/// Parses one algorithm description (used both in configs and tests).
AlgorithmEntry parse_algorithm(const json& spec);

/// Stable CSV schema written by run_experiments.
extern const char* const kCsvSchemaHeader;   // "# bmcts results schema v1"
extern const char* const kCsvColumnHeader;   // column name row

struct RunResult {
    std::vector<EvalReport> reports;
    std::string csv_path;
    std::string resolved_config_path;
};

/// Runs every (algorithm, seed) cell, one CSV row per checkpoint. Cells are
/// independent and may execute on a worker pool; rows are written in
/// deterministic (algorithm, seed, checkpoint) order and flushed as cells
/// complete, so an interrupted run keeps its finished prefix. The resolved
/// config (defaults expanded) is logged next to the output.
RunResult run_experiments(const ExperimentConfig& config, const std::string& output_dir);

}  // namespace bmcts::tools
