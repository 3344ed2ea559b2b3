#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nimbus/scenario/config.hpp"

namespace nimbus {

struct SweepSpec {
    int vm_min = 1;
    int vm_max = 1;
    ScenarioConfig base;
};

struct SweepRow {
    int vm_count = 0;
    std::optional<double> avg_exec_time;
    std::optional<double> completion_rate;
    std::optional<std::string> error;

    bool operator==(const SweepRow&) const = default;
};

/// Parses `lo..hi` (inclusive, 1 <= lo <= hi). Throws ConfigError.
std::pair<int, int> parse_vm_range(std::string_view text);

/// One independent simulation per VM count, run on up to `jobs` threads.
/// Rows come back in ascending vm_count regardless of completion order; a
/// failing run yields a row with `error` set.
std::vector<SweepRow> sweep(const SweepSpec& spec, unsigned jobs = 1);

/// Header `vm_count,avg_exec_time,completion_rate`; undefined values are NA.
std::string render_sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace nimbus
