#include "nimbus/entities/datacenter.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nimbus/entities/messages.hpp"
#include "nimbus/power/consolidation.hpp"
#include "nimbus/power/energy.hpp"

namespace nimbus {

Datacenter::Datacenter(std::string name, DatacenterCharacteristics characteristics, std::vector<HostSpec> hosts,
                       DatacenterOptions options)
    : Entity(std::move(name)),
      characteristics_(std::move(characteristics)),
      pool_(std::move(hosts)),
      options_(std::move(options)),
      trajectories_(pool_.size()) {
    std::size_t history_capacity = UtilizationHistory::kMinCapacity;
    if (options_.consolidation) {
        options_.consolidation->validate();
        if (const auto* lr = std::get_if<LrDetector>(&options_.consolidation->detector)) {
            history_capacity = std::max(history_capacity, lr->window);
        }
    }
    histories_.assign(pool_.size(), UtilizationHistory(history_capacity));
}

void Datacenter::start() {
    sim().schedule(0.0, id(), kInformationServiceId, Tag::Register);
    sample_all();
}

void Datacenter::process(const Event& ev) {
    switch (ev.tag) {
        case Tag::CreateVm: on_create_vm(ev); break;
        case Tag::SubmitCloudlet: on_submit(ev); break;
        case Tag::UpdateProcessing: on_update(ev); break;
        case Tag::DestroyVm: on_destroy(ev); break;
        case Tag::Consolidate: on_consolidate(); break;
        default: sim().warn(name() + " ignored " + std::string(to_string(ev.tag))); break;
    }
}

const CloudletScheduler* Datacenter::scheduler_of(int vm_id) const {
    auto it = vms_.find(vm_id);
    return it == vms_.end() ? nullptr : &it->second.scheduler;
}

void Datacenter::on_create_vm(const Event& ev) {
    const Vm vm = std::any_cast<const Vm&>(ev.payload);
    std::optional<int> host;
    if (vms_.contains(vm.id)) {
        sim().warn(name() + ": vm " + std::to_string(vm.id) + " already exists");
    } else {
        host = allocate_host(options_.allocation, pool_, VmDemand::of(vm));
    }
    if (host) vms_.emplace(vm.id, HostedVm{vm, CloudletScheduler(vm.scheduler, vm.mips, vm.pe_count), {}});
    sim().schedule(0.0, id(), ev.src, Tag::CreateVmAck, VmCreateAck{vm, id(), host});
}

void Datacenter::on_submit(const Event& ev) {
    Cloudlet cloudlet = std::any_cast<const Cloudlet&>(ev.payload);
    cloudlet.datacenter = id();
    auto it = cloudlet.vm ? vms_.find(*cloudlet.vm) : vms_.end();
    if (it == vms_.end() || cloudlet.pes_required != 1) {
        sim().warn(name() + ": cloudlet " + std::to_string(cloudlet.id) +
                   (it == vms_.end() ? " targets an unknown vm" : " requires more than one PE"));
        cloudlet.advance(CloudletStatus::Failed);
        sim().schedule(options_.hop_latency, id(), ev.src, Tag::CloudletDone, std::move(cloudlet));
        return;
    }
    HostedVm& vm = it->second;
    deliver(vm.scheduler.submit(std::move(cloudlet), sim().clock()), vm.spec.owner);
    reschedule(it->first, vm);
    sample_host(*pool_.host_of(it->first));
    ensure_epoch();
}

void Datacenter::on_update(const Event& ev) {
    const int vm_id = std::any_cast<VmRef>(ev.payload).vm_id;
    auto it = vms_.find(vm_id);
    if (it == vms_.end()) return;
    HostedVm& vm = it->second;
    vm.pending_update.reset();
    deliver(vm.scheduler.update(sim().clock()), vm.spec.owner);
    reschedule(vm_id, vm);
    sample_host(*pool_.host_of(vm_id));
}

void Datacenter::on_destroy(const Event& ev) {
    const int vm_id = std::any_cast<VmRef>(ev.payload).vm_id;
    auto it = vms_.find(vm_id);
    if (it == vms_.end()) return;
    HostedVm& vm = it->second;
    if (vm.pending_update) sim().cancel(*vm.pending_update);

    std::vector<Cloudlet> orphans = vm.scheduler.update(sim().clock());
    for (const auto& slot : vm.scheduler.running()) orphans.push_back(slot.cloudlet);
    for (const auto& slot : vm.scheduler.waiting()) orphans.push_back(slot.cloudlet);
    for (auto& c : orphans) {
        if (!is_terminal(c.status())) c.advance(CloudletStatus::Canceled);
    }
    const EntityId owner = vm.spec.owner;
    vms_.erase(it);
    const auto host = pool_.release(vm_id);
    deliver(std::move(orphans), owner);
    if (host) sample_host(*host);
}

void Datacenter::on_consolidate() {
    epoch_pending_ = false;
    sample_all();
    const auto result = consolidate_epoch(pool_, histories_, granted_mips(), *options_.consolidation);
    migrations_ += static_cast<int>(result.migrations.size());
    for (const auto& note : result.infeasible) sim().warn(name() + ": " + note);
    if (!result.migrations.empty()) sample_all();
    ensure_epoch();
}

void Datacenter::deliver(std::vector<Cloudlet> done, EntityId owner) {
    for (auto& c : done) sim().schedule(options_.hop_latency, id(), owner, Tag::CloudletDone, std::move(c));
}

void Datacenter::reschedule(int vm_id, HostedVm& vm) {
    if (vm.pending_update) {
        sim().cancel(*vm.pending_update);
        vm.pending_update.reset();
    }
    if (auto next = vm.scheduler.next_completion()) {
        const SimTime at = std::max(*next, sim().clock());
        vm.pending_update = sim().schedule_at(at, id(), id(), Tag::UpdateProcessing, VmRef{vm_id});
    }
}

std::map<int, double> Datacenter::granted_mips() const {
    std::map<int, double> out;
    for (const auto& [vm_id, vm] : vms_) out.emplace(vm_id, vm.scheduler.granted_mips());
    return out;
}

void Datacenter::sample_host(int host) {
    double granted = 0.0;
    for (const auto& vm : pool_.vms_on(host)) granted += vms_.at(vm.vm_id).scheduler.granted_mips();
    const double total = pool_.hosts()[static_cast<std::size_t>(host)].total_mips();
    const double u = std::clamp(granted / total, 0.0, 1.0);
    const SimTime now = sim().clock();
    histories_[static_cast<std::size_t>(host)].record(now, u);
    trajectories_[static_cast<std::size_t>(host)].record(now, u);
}

void Datacenter::sample_all() {
    for (int h = 0; h < static_cast<int>(pool_.size()); ++h) sample_host(h);
}

void Datacenter::ensure_epoch() {
    if (!options_.consolidation || epoch_pending_) return;
    const bool busy = std::any_of(vms_.begin(), vms_.end(), [](const auto& kv) { return !kv.second.scheduler.idle(); });
    if (!busy) return;
    const SimTime epoch = options_.consolidation->epoch;
    const SimTime next = (std::floor(sim().clock() / epoch) + 1.0) * epoch;
    sim().schedule_at(next, id(), id(), Tag::Consolidate);
    epoch_pending_ = true;
}

double Datacenter::energy(SimTime end, int& unmetered) const {
    double joules = 0.0;
    for (std::size_t h = 0; h < pool_.size(); ++h) {
        const auto& spec = pool_.hosts()[h];
        if (!spec.power) {
            ++unmetered;
            continue;
        }
        joules += energy_joules(*spec.power, trajectories_[h].samples(), end);
    }
    return joules;
}

}  // namespace nimbus
