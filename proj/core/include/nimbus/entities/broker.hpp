#pragma once

#include <map>
#include <string>
#include <vector>

#include "nimbus/entities/cloudlet.hpp"
#include "nimbus/entities/vm.hpp"
#include "nimbus/kernel/simulation.hpp"

namespace nimbus {

/// Acts for one user. Timeline, with h the control-hop latency:
///   0      query the information service (one hop)
///   h      request every VM at the first provider; rejected VMs are retried
///          at the next provider in registration order (answered at once)
///   h      bind cloudlet i to created_vms[i mod n] and submit (one hop)
///   2h     cloudlets start executing
/// When every submitted cloudlet is back, the VMs are destroyed and the
/// simulation is ended one hop later.
class Broker final : public Entity {
public:
    Broker(std::string name, std::vector<Vm> vms, std::vector<Cloudlet> cloudlets, SimTime hop_latency = 0.1);

    void start() override;
    void process(const Event& ev) override;

    const std::vector<EntityId>& providers() const { return providers_; }
    /// Successfully created VM ids, ascending.
    const std::vector<int>& created_vms() const { return created_; }
    const std::vector<int>& failed_vms() const { return failed_; }
    /// Datacenter hosting each created VM.
    const std::map<int, EntityId>& vm_locations() const { return locations_; }
    const std::vector<Vm>& requested_vms() const { return vms_; }
    /// Cloudlet id -> VM id, as bound round-robin.
    const std::map<int, int>& bindings() const { return bindings_; }
    /// Every cloudlet that reached a terminal status, in arrival order.
    const std::vector<Cloudlet>& completed() const { return completed_; }
    bool finished() const { return finished_; }

private:
    void on_providers(const Event& ev);
    void on_vm_ack(const Event& ev);
    void on_cloudlet_done(const Event& ev);
    void request_vm(std::size_t vm_index, std::size_t provider_index);
    void submit_cloudlets();
    void fail_all_cloudlets();
    void shutdown();

    std::vector<Vm> vms_;
    std::vector<Cloudlet> cloudlets_;
    SimTime hop_;
    std::vector<EntityId> providers_;
    std::map<int, std::size_t> attempts_;  // vm id -> provider index being tried
    std::size_t unresolved_ = 0;
    std::vector<int> created_;
    std::vector<int> failed_;
    std::map<int, EntityId> locations_;
    std::map<int, int> bindings_;
    std::vector<Cloudlet> completed_;
    std::size_t outstanding_ = 0;
    bool finished_ = false;
};

}  // namespace nimbus
