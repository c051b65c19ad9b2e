#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bmcts/config.hpp"

namespace bmcts::tools {

struct SamplingBenchRow {
    std::string mode;      // "alias_on", "alias_off", "backup_fast", "backup_naive"
    int branching;
    std::int64_t trials;
    std::int64_t elapsed_ns;
    double trials_per_sec;
};

struct SamplingBenchReport {
    std::vector<SamplingBenchRow> rows;

    /// trials/sec of `mode_num` divided by trials/sec of `mode_den` at a
    /// given branching factor.
    double ratio(const std::string& mode_num, const std::string& mode_den, int branching) const;

    std::string to_csv() const;
};

/// Times BTS trials on wide-tree environments: alias sampling on vs off, and
/// fast vs naive Bellman backups. The interesting quantities are ratios;
/// absolute times depend on the machine.
SamplingBenchReport bench_sampling(const std::vector<int>& branching_factors,
                                   std::int64_t trials_per_config, std::uint64_t seed = 1);

/// Median nanoseconds per alias-table draw at category count m, over `reps`
/// timed batches of `draws` samples each.
double bench_alias_draw_ns(std::size_t m, std::int64_t draws, int reps, std::uint64_t seed = 1);

}  // namespace bmcts::tools
