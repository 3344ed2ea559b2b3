#include "nimbus/sched/host_pool.hpp"

#include <string>

#include "nimbus/kernel/simulation.hpp"

namespace nimbus {

std::optional<VmAllocationPolicy> parse_allocation_policy(std::string_view name) {
    if (name == "most_free_pes" || name == "simple") return VmAllocationPolicy::MostFreePes;
    return std::nullopt;
}

std::string_view to_string(VmAllocationPolicy) { return "most_free_pes"; }

HostPool::HostPool(std::vector<HostSpec> hosts) : hosts_(std::move(hosts)), used_(hosts_.size()) {
    for (std::size_t i = 0; i < hosts_.size(); ++i) {
        const auto& h = hosts_[i];
        if (h.id != static_cast<int>(i)) throw ContractViolation("host ids must be 0..n-1 in order");
        if (h.pe_count < 1 || !(h.mips > 0.0)) throw ContractViolation("host needs at least one PE with positive mips");
        if (h.ram < 0 || h.bw < 0 || h.storage < 0) throw ContractViolation("host resources must be nonnegative");
    }
}

const HostSpec& HostPool::spec(int host) const {
    if (host < 0 || host >= static_cast<int>(hosts_.size())) {
        throw ContractViolation("no host with id " + std::to_string(host));
    }
    return hosts_[static_cast<std::size_t>(host)];
}

int HostPool::free_pes(int host) const { return spec(host).pe_count - used_[static_cast<std::size_t>(host)].pes; }

std::int64_t HostPool::free_ram(int host) const { return spec(host).ram - used_[static_cast<std::size_t>(host)].ram; }

std::int64_t HostPool::free_bw(int host) const { return spec(host).bw - used_[static_cast<std::size_t>(host)].bw; }

bool HostPool::fits(int host, const VmDemand& vm) const {
    const auto& h = spec(host);
    return vm.mips <= h.mips && free_pes(host) >= vm.pe_count && free_ram(host) >= vm.ram && free_bw(host) >= vm.bw;
}

void HostPool::place(int host, const VmDemand& vm) {
    if (placements_.contains(vm.vm_id)) throw ContractViolation("vm " + std::to_string(vm.vm_id) + " already placed");
    if (!fits(host, vm)) {
        throw ContractViolation("vm " + std::to_string(vm.vm_id) + " does not fit host " + std::to_string(host));
    }
    auto& u = used_[static_cast<std::size_t>(host)];
    u.pes += vm.pe_count;
    u.ram += vm.ram;
    u.bw += vm.bw;
    placements_.emplace(vm.vm_id, std::make_pair(host, vm));
}

std::optional<int> HostPool::release(int vm_id) {
    auto it = placements_.find(vm_id);
    if (it == placements_.end()) return std::nullopt;
    const auto [host, vm] = it->second;
    auto& u = used_[static_cast<std::size_t>(host)];
    u.pes -= vm.pe_count;
    u.ram -= vm.ram;
    u.bw -= vm.bw;
    placements_.erase(it);
    return host;
}

std::optional<int> HostPool::host_of(int vm_id) const {
    auto it = placements_.find(vm_id);
    if (it == placements_.end()) return std::nullopt;
    return it->second.first;
}

std::vector<VmDemand> HostPool::vms_on(int host) const {
    std::vector<VmDemand> out;
    for (const auto& [id, entry] : placements_) {
        if (entry.first == host) out.push_back(entry.second);
    }
    return out;
}

bool HostPool::within_capacity() const {
    for (std::size_t i = 0; i < hosts_.size(); ++i) {
        const auto& h = hosts_[i];
        const auto& u = used_[i];
        if (u.pes > h.pe_count || u.ram > h.ram || u.bw > h.bw || u.pes < 0) return false;
    }
    return true;
}

std::optional<int> allocate_host(VmAllocationPolicy policy, HostPool& pool, const VmDemand& vm) {
    switch (policy) {
        case VmAllocationPolicy::MostFreePes: {
            std::optional<int> best;
            for (int h = 0; h < static_cast<int>(pool.size()); ++h) {
                if (!pool.fits(h, vm)) continue;
                if (!best || pool.free_pes(h) > pool.free_pes(*best)) best = h;
            }
            if (best) pool.place(*best, vm);
            return best;
        }
    }
    return std::nullopt;
}

}  // namespace nimbus
