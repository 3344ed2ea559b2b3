#pragma once

#include <memory>
#include <ostream>
#include <vector>

#include "nimbus/entities/broker.hpp"
#include "nimbus/entities/datacenter.hpp"
#include "nimbus/kernel/simulation.hpp"
#include "nimbus/metrics/report.hpp"
#include "nimbus/scenario/config.hpp"

namespace nimbus {

/// A scenario wired into a fresh simulation: datacenters first (ids 2, 3,
/// ...), then the broker. Exposes the kernel so callers can pause/resume.
class ScenarioRun {
public:
    explicit ScenarioRun(const ScenarioConfig& config);

    Simulation& simulation() { return *sim_; }
    const Broker& broker() const { return *broker_; }
    const std::vector<Datacenter*>& datacenters() const { return datacenters_; }

    /// Runs (or resumes) to completion and returns the report.
    SimulationReport execute();

    /// Report of a finished simulation.
    SimulationReport report() const;

private:
    ScenarioConfig config_;
    std::unique_ptr<Simulation> sim_;
    std::vector<Datacenter*> datacenters_;
    Broker* broker_ = nullptr;
};

/// Builds the cloudlet list a config describes (ids 0..count-1).
std::vector<Cloudlet> make_cloudlets(const CloudletConfig& config);

/// Builds the VM list a config describes (ids 0..count-1).
std::vector<Vm> make_vms(const VmConfig& config);

SimulationReport run_scenario(const ScenarioConfig& config, std::ostream* trace = nullptr);

}  // namespace nimbus
