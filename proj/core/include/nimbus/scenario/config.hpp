#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nimbus/entities/characteristics.hpp"
#include "nimbus/entities/vm.hpp"
#include "nimbus/power/detectors.hpp"
#include "nimbus/power/power_model.hpp"
#include "nimbus/sched/host_pool.hpp"

namespace nimbus {

/// Schema violation in a scenario document. key() is a JSON path such as
/// `datacenters[0].hosts[1].pe_count`.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, std::string value, const std::string& reason);

    const std::string& key() const { return key_; }
    const std::string& value() const { return value_; }

private:
    std::string key_;
    std::string value_;
};

struct HostConfig {
    int pe_count = 1;
    double mips = 1000.0;
    std::int64_t ram = 2048;
    std::int64_t bw = 10000;
    std::int64_t storage = 1000000;
    SchedulingPolicy vm_scheduler = SchedulingPolicy::TimeShared;
    std::optional<PowerModel> power;

    bool operator==(const HostConfig&) const = default;
};

struct DatacenterConfig {
    std::vector<HostConfig> hosts;
    DatacenterCharacteristics characteristics;
    VmAllocationPolicy vm_allocation = VmAllocationPolicy::MostFreePes;

    bool operator==(const DatacenterConfig&) const = default;
};

struct VmConfig {
    int count = 0;
    double mips = 1000.0;
    int pe_count = 1;
    std::int64_t ram = 512;
    std::int64_t bw = 1000;
    std::int64_t image_size = 10000;
    std::string vmm = "Xen";
    SchedulingPolicy scheduler = SchedulingPolicy::TimeShared;

    bool operator==(const VmConfig&) const = default;
};

struct CloudletConfig {
    int count = 0;
    double length = 1000.0;
    std::int64_t file_size = 300;
    std::int64_t output_size = 300;
    int pes = 1;

    bool operator==(const CloudletConfig&) const = default;
};

struct OutputConfig {
    std::string format = "table";  // table | csv
    std::optional<std::string> path;
    std::optional<std::string> trace;

    bool operator==(const OutputConfig&) const = default;
};

struct ScenarioConfig {
    std::string name = "scenario";
    SimTime hop_latency = 0.1;
    std::vector<DatacenterConfig> datacenters;
    VmConfig vms;
    CloudletConfig cloudlets;
    std::optional<ConsolidationConfig> power;
    OutputConfig outputs;

    bool operator==(const ScenarioConfig&) const = default;
};

/// Parses and validates a scenario document. Throws ConfigError.
ScenarioConfig parse_scenario_text(const std::string& json_text);

/// Reads `path`; a bare bundled name such as `scenario_a` resolves to the
/// shipped scenario file when no such path exists. Throws ConfigError.
ScenarioConfig parse_scenario(const std::filesystem::path& path);

/// Serializes a config in the same schema parse_scenario_text accepts.
std::string emit_scenario(const ScenarioConfig& config);

/// Directory holding the bundled scenarios.
std::filesystem::path bundled_scenario_dir();

}  // namespace nimbus
