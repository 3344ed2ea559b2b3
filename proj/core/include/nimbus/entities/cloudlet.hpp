#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "nimbus/kernel/event.hpp"

namespace nimbus {

enum class CloudletStatus : std::uint8_t { Created, Queued, InExec, Success, Failed, Canceled };

std::string_view to_string(CloudletStatus status);

bool is_terminal(CloudletStatus status);

/// A unit of application work measured in million instructions (MI).
class Cloudlet {
public:
    Cloudlet() = default;
    Cloudlet(int id, double length_mi, std::int64_t file_size, std::int64_t output_size = 300, int pes_required = 1);

    int id = 0;
    double length = 0.0;
    std::int64_t file_size = 0;
    std::int64_t output_size = 300;
    int pes_required = 1;
    /// Extra delay between the broker's bulk submission and this cloudlet's.
    SimTime submission_delay = 0.0;

    std::optional<int> vm;
    std::optional<EntityId> datacenter;
    std::optional<SimTime> exec_start;
    std::optional<SimTime> finish;

    CloudletStatus status() const { return status_; }

    /// Moves along Created -> Queued -> InExec -> Success. Failed and
    /// Canceled are reachable from any non-terminal state. Throws
    /// ContractViolation otherwise.
    void advance(CloudletStatus next);

    bool operator==(const Cloudlet&) const = default;

private:
    CloudletStatus status_ = CloudletStatus::Created;
};

}  // namespace nimbus
