#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "nimbus/entities/characteristics.hpp"
#include "nimbus/entities/cloudlet.hpp"
#include "nimbus/kernel/event.hpp"

namespace nimbus {

/// One row of the results table.
struct CloudletRecord {
    int cloudlet_id = 0;
    CloudletStatus status = CloudletStatus::Created;
    std::optional<EntityId> datacenter;
    std::optional<int> vm;
    std::optional<double> time;  // finish - start, exactly
    std::optional<SimTime> start;
    std::optional<SimTime> finish;

    static CloudletRecord of(const Cloudlet& c);

    bool operator==(const CloudletRecord&) const = default;
};

struct SimulationReport {
    std::vector<CloudletRecord> records;  // ordered by (finish, vm id, cloudlet id)
    std::optional<double> completion_rate;
    std::optional<double> avg_exec_time;
    double total_cost = 0.0;
    double energy = 0.0;       // joules
    int unmetered_hosts = 0;   // hosts without a power model
    int migrations = 0;
    SimTime final_clock = 0.0;

    bool operator==(const SimulationReport&) const = default;
};

/// Sorts by (finish, vm id, cloudlet id); records without a finish go last.
void order_records(std::vector<CloudletRecord>& records);

/// Successful / total. nullopt for an empty record list.
std::optional<double> completion_rate(std::span<const CloudletRecord> records);

/// Mean execution time over successful records. nullopt without successes.
std::optional<double> average_execution_time(std::span<const CloudletRecord> records);

struct VmResources {
    std::int64_t ram = 0;
    std::int64_t image_size = 0;
};

struct CloudletIo {
    std::int64_t file_size = 0;
    std::int64_t output_size = 0;
};

/// What total_cost needs beyond the records themselves.
struct CostBasis {
    std::map<EntityId, PriceVector> prices;  // by datacenter
    std::map<int, VmResources> vms;          // by vm id
    std::map<int, CloudletIo> cloudlets;     // by cloudlet id
};

/// Sum over successful cloudlets of
///   cpu * time + bw * (file + output) + mem * ram * time + storage * image.
double total_cost(std::span<const CloudletRecord> records, const CostBasis& basis);

}  // namespace nimbus
