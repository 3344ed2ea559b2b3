#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nimbus/entities/characteristics.hpp"
#include "nimbus/entities/cloudlet.hpp"
#include "nimbus/entities/vm.hpp"
#include "nimbus/kernel/simulation.hpp"
#include "nimbus/power/detectors.hpp"
#include "nimbus/power/utilization_history.hpp"
#include "nimbus/sched/cloudlet_scheduler.hpp"
#include "nimbus/sched/host_pool.hpp"

namespace nimbus {

struct DatacenterOptions {
    VmAllocationPolicy allocation = VmAllocationPolicy::MostFreePes;
    std::optional<ConsolidationConfig> consolidation;
    SimTime hop_latency = 0.1;
};

/// Resource provider: places VMs on hosts, runs their cloudlet schedulers,
/// tracks host utilization and (optionally) consolidates overloaded hosts.
///
/// VM creation is answered at zero latency; finished cloudlets travel back
/// to their broker over one control hop.
class Datacenter final : public Entity {
public:
    Datacenter(std::string name, DatacenterCharacteristics characteristics, std::vector<HostSpec> hosts,
               DatacenterOptions options = {});

    void start() override;
    void process(const Event& ev) override;

    const DatacenterCharacteristics& characteristics() const { return characteristics_; }
    const HostPool& hosts() const { return pool_; }
    int migrations() const { return migrations_; }
    const std::vector<UtilizationHistory>& histories() const { return histories_; }
    const std::vector<UtilizationTrajectory>& trajectories() const { return trajectories_; }
    std::size_t hosted_vms() const { return vms_.size(); }
    const CloudletScheduler* scheduler_of(int vm_id) const;

    /// Energy of every host with a power model up to `end`. Hosts without a
    /// model contribute nothing and are counted in `unmetered`.
    double energy(SimTime end, int& unmetered) const;

private:
    struct HostedVm {
        Vm spec;
        CloudletScheduler scheduler;
        std::optional<std::uint64_t> pending_update;
    };

    void on_create_vm(const Event& ev);
    void on_submit(const Event& ev);
    void on_update(const Event& ev);
    void on_destroy(const Event& ev);
    void on_consolidate();

    void deliver(std::vector<Cloudlet> done, EntityId owner);
    void reschedule(int vm_id, HostedVm& vm);
    void sample_host(int host);
    void sample_all();
    void ensure_epoch();
    std::map<int, double> granted_mips() const;

    DatacenterCharacteristics characteristics_;
    HostPool pool_;
    DatacenterOptions options_;
    std::map<int, HostedVm> vms_;
    std::vector<UtilizationHistory> histories_;
    std::vector<UtilizationTrajectory> trajectories_;
    int migrations_ = 0;
    bool epoch_pending_ = false;
};

}  // namespace nimbus
