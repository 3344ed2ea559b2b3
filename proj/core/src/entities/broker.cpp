#include "nimbus/entities/broker.hpp"

#include <algorithm>
#include <string>

#include "nimbus/entities/messages.hpp"

namespace nimbus {

Broker::Broker(std::string name, std::vector<Vm> vms, std::vector<Cloudlet> cloudlets, SimTime hop_latency)
    : Entity(std::move(name)), vms_(std::move(vms)), cloudlets_(std::move(cloudlets)), hop_(hop_latency) {
    if (!(hop_ >= 0.0)) throw ContractViolation("hop latency must be nonnegative");
    std::stable_sort(vms_.begin(), vms_.end(), [](const Vm& a, const Vm& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < vms_.size(); ++i) {
        if (vms_[i].id == vms_[i - 1].id) throw ContractViolation("duplicate vm id " + std::to_string(vms_[i].id));
    }
}

void Broker::start() {
    for (auto& vm : vms_) vm.owner = id();
    sim().schedule(hop_, id(), kInformationServiceId, Tag::QueryProviders);
}

void Broker::process(const Event& ev) {
    switch (ev.tag) {
        case Tag::ProviderList: on_providers(ev); break;
        case Tag::CreateVmAck: on_vm_ack(ev); break;
        case Tag::CloudletDone: on_cloudlet_done(ev); break;
        default: sim().warn(name() + " ignored " + std::string(to_string(ev.tag))); break;
    }
}

void Broker::on_providers(const Event& ev) {
    providers_ = std::any_cast<const ProviderList&>(ev.payload).providers;
    if (providers_.empty()) {
        for (const auto& vm : vms_) failed_.push_back(vm.id);
        if (!vms_.empty()) sim().warn(name() + ": no providers registered, every VM request fails");
        submit_cloudlets();
        return;
    }
    unresolved_ = vms_.size();
    if (unresolved_ == 0) {
        submit_cloudlets();
        return;
    }
    for (std::size_t i = 0; i < vms_.size(); ++i) request_vm(i, 0);
}

void Broker::request_vm(std::size_t vm_index, std::size_t provider_index) {
    const Vm& vm = vms_[vm_index];
    attempts_[vm.id] = provider_index;
    sim().schedule(0.0, id(), providers_[provider_index], Tag::CreateVm, vm);
}

void Broker::on_vm_ack(const Event& ev) {
    const auto& ack = std::any_cast<const VmCreateAck&>(ev.payload);
    const int vm_id = ack.vm.id;
    if (ack.created()) {
        created_.push_back(vm_id);
        locations_[vm_id] = ack.datacenter;
    } else {
        const std::size_t next = attempts_.at(vm_id) + 1;
        if (next < providers_.size()) {
            auto it = std::find_if(vms_.begin(), vms_.end(), [&](const Vm& v) { return v.id == vm_id; });
            request_vm(static_cast<std::size_t>(it - vms_.begin()), next);
            return;
        }
        failed_.push_back(vm_id);
        sim().warn(name() + ": vm " + std::to_string(vm_id) + " rejected by every provider");
    }
    if (--unresolved_ == 0) {
        std::sort(created_.begin(), created_.end());
        std::sort(failed_.begin(), failed_.end());
        submit_cloudlets();
    }
}

void Broker::submit_cloudlets() {
    if (created_.empty()) {
        fail_all_cloudlets();
        shutdown();
        return;
    }
    for (std::size_t i = 0; i < cloudlets_.size(); ++i) {
        Cloudlet c = cloudlets_[i];
        const int vm_id = created_[i % created_.size()];
        c.vm = vm_id;
        bindings_[c.id] = vm_id;
        ++outstanding_;
        sim().schedule(hop_ + c.submission_delay, id(), locations_.at(vm_id), Tag::SubmitCloudlet, std::move(c));
    }
    if (outstanding_ == 0) shutdown();
}

void Broker::fail_all_cloudlets() {
    for (auto c : cloudlets_) {
        c.advance(CloudletStatus::Failed);
        completed_.push_back(std::move(c));
    }
    if (!cloudlets_.empty()) sim().warn(name() + ": no VM was created, every cloudlet fails");
}

void Broker::on_cloudlet_done(const Event& ev) {
    completed_.push_back(std::any_cast<const Cloudlet&>(ev.payload));
    if (outstanding_ > 0 && --outstanding_ == 0) shutdown();
}

void Broker::shutdown() {
    for (int vm_id : created_) sim().schedule(hop_, id(), locations_.at(vm_id), Tag::DestroyVm, VmRef{vm_id});
    sim().schedule(hop_, id(), kManagerId, Tag::End);
    finished_ = true;
}

}  // namespace nimbus
