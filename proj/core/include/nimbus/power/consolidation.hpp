#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "nimbus/power/detectors.hpp"
#include "nimbus/sched/host_pool.hpp"

namespace nimbus {

struct Migration {
    int vm_id = 0;
    int from_host = 0;
    int to_host = 0;

    bool operator==(const Migration&) const = default;
};

struct ConsolidationResult {
    std::vector<Migration> migrations;
    std::vector<std::string> infeasible;
};

/// One consolidation decision over a datacenter's hosts.
///
/// `histories` holds one history per host (index = host id) and
/// `vm_mips` the MIPS currently granted to each placed VM. Hosts are visited
/// in id order; while a host is judged overloaded, its MMT-selected VM moves
/// to the feasible, non-overloaded host whose power draw rises least (ties to
/// the lowest id). A VM without a target stays put and is reported. The pool
/// is updated in place.
ConsolidationResult consolidate_epoch(HostPool& pool, std::span<const UtilizationHistory> histories,
                                      const std::map<int, double>& vm_mips, const ConsolidationConfig& config);

/// Utilization of one host given the MIPS granted to its VMs.
double host_utilization(const HostPool& pool, int host, const std::map<int, double>& vm_mips);

}  // namespace nimbus
