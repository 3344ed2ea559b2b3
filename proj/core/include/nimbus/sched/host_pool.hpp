#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "nimbus/entities/vm.hpp"
#include "nimbus/power/power_model.hpp"

namespace nimbus {

struct HostSpec {
    int id = 0;
    int pe_count = 1;
    double mips = 1000.0;  // per PE
    std::int64_t ram = 2048;
    std::int64_t bw = 10000;
    std::int64_t storage = 1000000;
    SchedulingPolicy vm_scheduler = SchedulingPolicy::TimeShared;
    std::optional<PowerModel> power;

    double total_mips() const { return mips * pe_count; }

    bool operator==(const HostSpec&) const = default;
};

/// What placement needs to know about a VM.
struct VmDemand {
    int vm_id = 0;
    int pe_count = 1;
    double mips = 1000.0;
    std::int64_t ram = 0;
    std::int64_t bw = 0;

    static VmDemand of(const Vm& vm) { return {vm.id, vm.pe_count, vm.mips, vm.ram, vm.bw}; }

    bool operator==(const VmDemand&) const = default;
};

enum class VmAllocationPolicy : std::uint8_t {
    /// Host with the most free PEs that fits; ties go to the lowest host id.
    MostFreePes,
};

std::optional<VmAllocationPolicy> parse_allocation_policy(std::string_view name);
std::string_view to_string(VmAllocationPolicy policy);

/// The hosts of one datacenter and the VMs placed on them. Accounting is by
/// whole PEs, RAM and bandwidth; a VM never asks more MIPS than one host PE.
class HostPool {
public:
    HostPool() = default;
    /// Host ids must equal their position in the list.
    explicit HostPool(std::vector<HostSpec> hosts);

    const std::vector<HostSpec>& hosts() const { return hosts_; }
    std::size_t size() const { return hosts_.size(); }

    int free_pes(int host) const;
    std::int64_t free_ram(int host) const;
    std::int64_t free_bw(int host) const;

    bool fits(int host, const VmDemand& vm) const;

    /// Places vm on host; throws ContractViolation if it does not fit or the
    /// vm is already placed.
    void place(int host, const VmDemand& vm);

    /// Removes a placement; returns the host it occupied.
    std::optional<int> release(int vm_id);

    std::optional<int> host_of(int vm_id) const;

    /// VMs on a host in ascending id order.
    std::vector<VmDemand> vms_on(int host) const;

    /// True when no host exceeds its PE, RAM or BW capacity.
    bool within_capacity() const;

private:
    struct Usage {
        int pes = 0;
        std::int64_t ram = 0;
        std::int64_t bw = 0;
    };

    const HostSpec& spec(int host) const;

    std::vector<HostSpec> hosts_;
    std::vector<Usage> used_;
    std::map<int, std::pair<int, VmDemand>> placements_;  // vm id -> (host, demand)
};

/// Chooses a host for vm under policy and records the placement. nullopt
/// means rejection; the pool is unchanged.
std::optional<int> allocate_host(VmAllocationPolicy policy, HostPool& pool, const VmDemand& vm);

}  // namespace nimbus
