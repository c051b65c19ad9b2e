#include "experiment.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "bmcts/env/ar_chain.hpp"
#include "bmcts/env/dchain.hpp"
#include "bmcts/env/frozen_lake.hpp"
#include "bmcts/env/random_mdp.hpp"
#include "bmcts/env/sailing.hpp"
#include "bmcts/env/tictactoe.hpp"
#include "bmcts/env/wide_tree.hpp"

namespace bmcts::tools {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw std::invalid_argument("config error at '" + where + "': " + what);
}

double get_number(const json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) fail(key, "expected a number");
    return j[key].get<double>();
}

std::int64_t get_int(const json& j, const std::string& key, std::int64_t fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number_integer()) fail(key, "expected an integer");
    return j[key].get<std::int64_t>();
}

std::string get_string(const json& j, const std::string& key, const std::string& fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_string()) fail(key, "expected a string");
    return j[key].get<std::string>();
}

}  // namespace

std::unique_ptr<MdpModel> make_environment(const json& spec) {
    if (!spec.is_object() || !spec.contains("name")) fail("environment", "missing 'name'");
    const std::string name = spec["name"].get<std::string>();

    if (name == "dchain") {
        env::DChainSpec d;
        d.length = static_cast<int>(get_int(spec, "D", 10));
        d.final_reward = get_number(spec, "final_reward", 1.0);
        return env::make_dchain(d);
    }
    if (name == "frozen_lake") {
        const std::string map_name = get_string(spec, "map", "8x12_test");
        const int horizon = static_cast<int>(get_int(spec, "horizon", 100));
        std::string text;
        if (map_name == "8x8") text = env::frozen_lake_map_8x8();
        else if (map_name == "8x12") text = env::frozen_lake_map_8x12();
        else if (map_name == "8x12_test") text = env::frozen_lake_map_8x12_test();
        else if (spec.contains("map_text")) text = spec["map_text"].get<std::string>();
        else {
            std::ifstream in(map_name);
            if (!in) fail("environment.map", "unknown map name and no such file: " + map_name);
            text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        }
        return env::make_frozen_lake(env::parse_grid_map(text, horizon));
    }
    if (name == "sailing") {
        env::SailingSpec s = env::SailingSpec::defaults();
        s.size = static_cast<int>(get_int(spec, "size", 6));
        s.initial_wind = static_cast<int>(get_int(spec, "initial_wind", 3));
        s.horizon = static_cast<int>(get_int(spec, "horizon", 50));
        return env::make_sailing(s);
    }
    if (name == "ar_chain") {
        env::ArCounterexampleSpec a;
        a.length = static_cast<int>(get_int(spec, "D", 10));
        return env::make_ar_counterexample(a);
    }
    if (name == "tictactoe") return env::make_tictactoe();
    if (name == "wide_tree") {
        return env::make_wide_tree(static_cast<int>(get_int(spec, "branching", 16)),
                                   static_cast<int>(get_int(spec, "depth", 2)),
                                   static_cast<std::uint64_t>(get_int(spec, "seed", 0)));
    }
    if (name == "random_mdp") {
        env::RandomMdpSpec r;
        r.num_states = static_cast<int>(get_int(spec, "states", 10));
        r.num_actions = static_cast<int>(get_int(spec, "actions", 3));
        r.horizon = static_cast<int>(get_int(spec, "horizon", 4));
        r.seed = static_cast<std::uint64_t>(get_int(spec, "seed", 0));
        return env::make_random_mdp(r);
    }
    fail("environment.name", "unknown environment '" + name + "'");
}

std::vector<EnvironmentInfo> environment_catalog() {
    return {
        {"dchain", "D, final_reward", "deterministic chain with an early-exit action per state"},
        {"frozen_lake", "map (8x8|8x12|8x12_test|file), horizon",
         "deterministic gridworld, goal pays 0.99^t on arrival, holes absorb"},
        {"sailing", "size, initial_wind, horizon",
         "stochastic-wind grid, 8 headings, tack-dependent costs"},
        {"ar_chain", "D", "average-return counterexample chain"},
        {"tictactoe", "", "two-player 3x3 game, +1/-1/0 credited to the first player"},
        {"wide_tree", "branching, depth, seed", "A-ary tree with seeded leaf rewards"},
        {"random_mdp", "states, actions, horizon, seed", "seeded random finite-horizon MDP"},
    };
}

AlgorithmEntry parse_algorithm(const json& spec) {
    if (!spec.is_object() || !spec.contains("name")) fail("algorithms[]", "missing 'name'");
    const std::string name = spec["name"].get<std::string>();
    const auto algorithm = algorithm_from_name(name);
    if (!algorithm) fail("algorithms[].name", "unknown algorithm '" + name + "'");

    AlgorithmEntry entry;
    entry.config.algorithm = *algorithm;
    entry.config.epsilon = get_number(spec, "epsilon", 1.0);
    entry.config.alpha = get_number(spec, "alpha", 1.0);
    entry.config.uct_c = get_number(spec, "uct_c", 1.0);
    entry.config.v_init = get_number(spec, "v_init", 0.0);
    entry.config.q_init = get_number(spec, "q_init", entry.config.v_init);
    if (spec.contains("rollout_init")) entry.config.rollout_init = spec["rollout_init"].get<bool>();
    if (spec.contains("alias")) entry.config.use_alias = spec["alias"].get<bool>();
    entry.config.alias_rebuild_every =
        static_cast<int>(get_int(spec, "alias_rebuild_every", 0));

    const std::string backup = get_string(spec, "backup", "fast");
    if (backup == "fast") entry.config.backup = BackupMode::fast;
    else if (backup == "naive") entry.config.backup = BackupMode::naive;
    else fail("algorithms[].backup", "expected 'fast' or 'naive'");

    const std::string rule = get_string(spec, "recommend", "value_argmax");
    if (rule == "value_argmax") entry.config.recommend_rule = RecommendRule::value_argmax;
    else if (rule == "most_visited") entry.config.recommend_rule = RecommendRule::most_visited;
    else fail("algorithms[].recommend", "expected 'value_argmax' or 'most_visited'");

    // Entropy weight: beta(m) = beta_init / log(e + m) by default.
    entry.config.beta =
        Schedule::parse(get_string(spec, "beta_kind", "inverse_log"),
                        get_number(spec, "beta_init", entry.config.alpha));
    // AR temperature schedule: alpha(m) = alpha_init / sqrt(m) by default,
    // except for ar-ments, which is defined by a fixed temperature.
    const bool fixed_temp = entry.config.algorithm == Algorithm::ar_ments;
    entry.config.alpha_schedule = Schedule::parse(
        get_string(spec, "alpha_schedule", fixed_temp ? "constant" : "inverse_sqrt"),
        get_number(spec, "alpha_init", fixed_temp ? entry.config.alpha : 1.0));

    entry.label = get_string(spec, "label", algorithm_name(*algorithm));
    entry.config.validate();
    return entry;
}

ExperimentConfig parse_experiment_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config error: top level must be an object");

    ExperimentConfig cfg;
    if (!j.contains("environment")) fail("environment", "missing");
    cfg.env_spec = j["environment"];
    make_environment(cfg.env_spec);  // validate eagerly

    if (!j.contains("algorithms") || !j["algorithms"].is_array() || j["algorithms"].empty())
        fail("algorithms", "expected a non-empty array");
    for (const auto& a : j["algorithms"]) cfg.algorithms.push_back(parse_algorithm(a));

    if (j.contains("seeds")) {
        if (j["seeds"].is_array()) {
            for (const auto& s : j["seeds"]) cfg.seeds.push_back(s.get<std::uint64_t>());
        } else if (j["seeds"].is_object()) {
            const auto count = get_int(j["seeds"], "count", 1);
            const auto base = get_int(j["seeds"], "base", 1);
            for (std::int64_t i = 0; i < count; ++i)
                cfg.seeds.push_back(static_cast<std::uint64_t>(base + i));
        } else {
            fail("seeds", "expected an array or {count, base}");
        }
    } else {
        cfg.seeds = {1};
    }

    cfg.trials = get_int(j, "trials", cfg.trials);
    cfg.checkpoint_every = get_int(j, "checkpoint_every", cfg.checkpoint_every);
    cfg.eval_trajectories = get_int(j, "eval_trajectories", cfg.eval_trajectories);
    cfg.output = get_string(j, "output", cfg.output);
    if (j.contains("deterministic_timing"))
        cfg.deterministic_timing = j["deterministic_timing"].get<bool>();
    cfg.parallelism = static_cast<int>(get_int(j, "parallelism", 1));
    if (cfg.trials < 1 || cfg.checkpoint_every < 1 || cfg.eval_trajectories < 1)
        fail("trials/checkpoint_every/eval_trajectories", "must be positive");
    if (cfg.parallelism < 1) fail("parallelism", "must be >= 1");
    return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::string text(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>{});
    return parse_experiment_config(text);
}

json ExperimentConfig::resolved() const {
    json out;
    out["environment"] = env_spec;
    out["seeds"] = seeds;
    out["trials"] = trials;
    out["checkpoint_every"] = checkpoint_every;
    out["eval_trajectories"] = eval_trajectories;
    out["output"] = output;
    out["deterministic_timing"] = deterministic_timing;
    out["parallelism"] = parallelism;
    out["algorithms"] = json::array();
    for (const auto& entry : algorithms) {
        const AlgorithmConfig& c = entry.config;
        json a;
        a["name"] = algorithm_name(c.algorithm);
        a["label"] = entry.label;
        a["epsilon"] = c.epsilon;
        a["alpha"] = c.alpha;
        a["uct_c"] = c.uct_c;
        a["v_init"] = c.v_init;
        a["q_init"] = c.q_init;
        a["rollout_init"] = c.rollout_init;
        a["alias"] = c.use_alias;
        a["alias_rebuild_every"] = c.alias_rebuild_every;
        a["backup"] = c.backup == BackupMode::fast ? "fast" : "naive";
        a["recommend"] =
            c.recommend_rule == RecommendRule::value_argmax ? "value_argmax" : "most_visited";
        a["beta_kind"] = c.beta.kind_name();
        a["beta_init"] = c.beta.init;
        a["alpha_schedule"] = c.alpha_schedule.kind_name();
        a["alpha_init"] = c.alpha_schedule.init;
        out["algorithms"].push_back(a);
    }
    return out;
}

const char* const kCsvSchemaHeader = "# bmcts results schema v1";
const char* const kCsvColumnHeader =
    "algorithm,env,seed,n_trials,est_value,std_err,simple_regret,wallclock_ns,trials_per_sec";

namespace {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

void append_rows(std::string& out, const EvalReport& report, const std::string& label,
                 bool deterministic_timing) {
    for (const Checkpoint& cp : report.checkpoints) {
        out += label;
        out += ',';
        out += report.env;
        out += ',';
        out += std::to_string(report.seed);
        out += ',';
        out += std::to_string(cp.n_trials);
        out += ',';
        out += format_double(cp.est_value);
        out += ',';
        out += format_double(cp.std_err);
        out += ',';
        out += format_double(cp.regret_raw);
        out += ',';
        out += std::to_string(deterministic_timing ? 0 : cp.wallclock_ns);
        out += ',';
        out += format_double(deterministic_timing ? 0.0 : cp.trials_per_sec);
        out += '\n';
    }
}

}  // namespace

RunResult run_experiments(const ExperimentConfig& config, const std::string& output_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(output_dir);
    const fs::path csv_path = fs::path(output_dir) / config.output;
    const fs::path resolved_path = fs::path(csv_path).concat(".resolved.json");

    {
        std::ofstream resolved(resolved_path);
        resolved << config.resolved().dump(2) << '\n';
    }

    for (const auto& entry : config.algorithms) {
        for (const std::string& w : entry.config.validate())
            std::fprintf(stderr, "warning: %s\n", w.c_str());
    }

    struct Cell {
        std::size_t algorithm;
        std::size_t seed;
    };
    std::vector<Cell> cells;
    for (std::size_t a = 0; a < config.algorithms.size(); ++a)
        for (std::size_t s = 0; s < config.seeds.size(); ++s) cells.push_back({a, s});

    std::vector<EvalReport> reports(cells.size());
    std::vector<std::string> rows(cells.size());
    std::vector<char> done(cells.size(), 0);

    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot open output file: " + csv_path.string());
    csv << kCsvSchemaHeader << '\n' << kCsvColumnHeader << '\n';
    csv.flush();

    std::mutex io_mutex;
    std::size_t next_flush = 0;
    std::atomic<std::size_t> next_cell{0};

    auto worker = [&]() {
        std::vector<Transition> scratch;
        while (true) {
            const std::size_t i = next_cell.fetch_add(1);
            if (i >= cells.size()) return;
            const Cell& cell = cells[i];
            const AlgorithmEntry& entry = config.algorithms[cell.algorithm];
            // Each cell gets its own environment instance and random stream.
            const auto mdp = make_environment(config.env_spec);
            EvalReport report =
                run_learning_curve(*mdp, entry.config, config.trials, config.checkpoint_every,
                                   config.eval_trajectories, config.seeds[cell.seed]);
            std::string text;
            append_rows(text, report, entry.label, config.deterministic_timing);

            std::lock_guard<std::mutex> lock(io_mutex);
            reports[i] = std::move(report);
            rows[i] = std::move(text);
            done[i] = 1;
            // Flush the finished prefix in deterministic cell order.
            while (next_flush < cells.size() && done[next_flush]) {
                csv << rows[next_flush];
                csv.flush();
                ++next_flush;
            }
        }
    };

    const int threads = std::max(1, std::min<int>(config.parallelism,
                                                  static_cast<int>(cells.size())));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    RunResult result;
    result.reports = std::move(reports);
    result.csv_path = csv_path.string();
    result.resolved_config_path = resolved_path.string();
    return result;
}

}  // namespace bmcts::tools
