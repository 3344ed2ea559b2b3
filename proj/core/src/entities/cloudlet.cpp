#include "nimbus/entities/cloudlet.hpp"

#include <string>

#include "nimbus/entities/vm.hpp"
#include "nimbus/kernel/simulation.hpp"

namespace nimbus {

std::string_view to_string(CloudletStatus status) {
    switch (status) {
        case CloudletStatus::Created: return "CREATED";
        case CloudletStatus::Queued: return "QUEUED";
        case CloudletStatus::InExec: return "INEXEC";
        case CloudletStatus::Success: return "SUCCESS";
        case CloudletStatus::Failed: return "FAILED";
        case CloudletStatus::Canceled: return "CANCELED";
    }
    return "UNKNOWN";
}

std::string_view to_string(SchedulingPolicy policy) {
    return policy == SchedulingPolicy::TimeShared ? "time_shared" : "space_shared";
}

bool is_terminal(CloudletStatus status) {
    return status == CloudletStatus::Success || status == CloudletStatus::Failed ||
           status == CloudletStatus::Canceled;
}

Cloudlet::Cloudlet(int id_, double length_mi, std::int64_t file_size_, std::int64_t output_size_, int pes)
    : id(id_), length(length_mi), file_size(file_size_), output_size(output_size_), pes_required(pes) {
    if (!(length > 0.0)) throw ContractViolation("cloudlet length must be positive");
    if (file_size < 0 || output_size < 0) throw ContractViolation("cloudlet sizes must be nonnegative");
    if (pes_required < 1) throw ContractViolation("cloudlet must require at least one PE");
}

void Cloudlet::advance(CloudletStatus next) {
    bool ok = false;
    if (!is_terminal(status_)) {
        switch (next) {
            case CloudletStatus::Queued: ok = status_ == CloudletStatus::Created; break;
            case CloudletStatus::InExec: ok = status_ == CloudletStatus::Queued; break;
            case CloudletStatus::Success: ok = status_ == CloudletStatus::InExec; break;
            case CloudletStatus::Failed:
            case CloudletStatus::Canceled: ok = true; break;
            case CloudletStatus::Created: ok = false; break;
        }
    }
    if (!ok) {
        throw ContractViolation("cloudlet " + std::to_string(id) + ": illegal transition " +
                                std::string(to_string(status_)) + " -> " + std::string(to_string(next)));
    }
    status_ = next;
}

}  // namespace nimbus
