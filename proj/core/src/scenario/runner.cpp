#include "nimbus/scenario/runner.hpp"

#include "nimbus/entities/information_service.hpp"

namespace nimbus {

std::vector<Cloudlet> make_cloudlets(const CloudletConfig& config) {
    std::vector<Cloudlet> out;
    out.reserve(static_cast<std::size_t>(config.count));
    for (int i = 0; i < config.count; ++i) {
        out.emplace_back(i, config.length, config.file_size, config.output_size, config.pes);
    }
    return out;
}

std::vector<Vm> make_vms(const VmConfig& config) {
    std::vector<Vm> out;
    out.reserve(static_cast<std::size_t>(config.count));
    for (int i = 0; i < config.count; ++i) {
        Vm vm;
        vm.id = i;
        vm.mips = config.mips;
        vm.pe_count = config.pe_count;
        vm.ram = config.ram;
        vm.bw = config.bw;
        vm.image_size = config.image_size;
        vm.vmm = config.vmm;
        vm.scheduler = config.scheduler;
        out.push_back(std::move(vm));
    }
    return out;
}

ScenarioRun::ScenarioRun(const ScenarioConfig& config) : config_(config), sim_(std::make_unique<Simulation>()) {
    sim_->init(std::make_unique<CloudInformationService>());
    for (std::size_t d = 0; d < config_.datacenters.size(); ++d) {
        const auto& dc = config_.datacenters[d];
        std::vector<HostSpec> hosts;
        for (std::size_t h = 0; h < dc.hosts.size(); ++h) {
            const auto& hc = dc.hosts[h];
            hosts.push_back(HostSpec{static_cast<int>(h), hc.pe_count, hc.mips, hc.ram, hc.bw, hc.storage,
                                     hc.vm_scheduler, hc.power});
        }
        DatacenterOptions options{dc.vm_allocation, config_.power, config_.hop_latency};
        datacenters_.push_back(&sim_->create<Datacenter>("datacenter_" + std::to_string(d), dc.characteristics,
                                                         std::move(hosts), options));
    }
    broker_ = &sim_->create<Broker>("broker", make_vms(config_.vms), make_cloudlets(config_.cloudlets),
                                    config_.hop_latency);
}

SimulationReport ScenarioRun::execute() {
    switch (sim_->phase()) {
        case Phase::Created: sim_->run(); break;
        case Phase::Paused: sim_->resume(); break;
        default: break;
    }
    while (sim_->phase() == Phase::Paused) sim_->resume();
    return report();
}

SimulationReport ScenarioRun::report() const {
    if (sim_->phase() != Phase::Finished) throw UsageError("report() before the simulation finished");
    SimulationReport report;
    for (const auto& c : broker_->completed()) report.records.push_back(CloudletRecord::of(c));
    order_records(report.records);
    report.completion_rate = completion_rate(report.records);
    report.avg_exec_time = average_execution_time(report.records);

    CostBasis basis;
    for (const auto* dc : datacenters_) basis.prices[dc->id()] = dc->characteristics().prices;
    for (const auto& vm : broker_->requested_vms()) basis.vms[vm.id] = VmResources{vm.ram, vm.image_size};
    for (const auto& c : broker_->completed()) basis.cloudlets[c.id] = CloudletIo{c.file_size, c.output_size};
    report.total_cost = total_cost(report.records, basis);

    report.final_clock = sim_->clock();
    for (const auto* dc : datacenters_) {
        report.energy += dc->energy(report.final_clock, report.unmetered_hosts);
        report.migrations += dc->migrations();
    }
    return report;
}

SimulationReport run_scenario(const ScenarioConfig& config, std::ostream* trace) {
    ScenarioRun run(config);
    run.simulation().set_trace(trace);
    return run.execute();
}

}  // namespace nimbus
