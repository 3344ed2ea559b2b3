#include "nimbus/power/utilization_history.hpp"

#include <algorithm>

#include "nimbus/kernel/simulation.hpp"

namespace nimbus {

namespace {

void check(SimTime time, double utilization, const UtilizationSample* newest) {
    if (!(utilization >= 0.0 && utilization <= 1.0)) throw ContractViolation("utilization sample out of [0, 1]");
    if (newest && time < newest->time) throw ContractViolation("utilization samples must be time-ordered");
}

}  // namespace

UtilizationHistory::UtilizationHistory(std::size_t capacity) : capacity_(std::max(capacity, kMinCapacity)) {}

void UtilizationHistory::record(SimTime time, double utilization) {
    check(time, utilization, samples_.empty() ? nullptr : &samples_.back());
    if (!samples_.empty() && samples_.back().time == time) {
        samples_.back().utilization = utilization;
        return;
    }
    samples_.push_back({time, utilization});
    if (samples_.size() > capacity_) samples_.pop_front();
}

std::optional<UtilizationSample> UtilizationHistory::latest() const {
    if (samples_.empty()) return std::nullopt;
    return samples_.back();
}

std::vector<double> UtilizationHistory::values() const {
    std::vector<double> out;
    out.reserve(samples_.size());
    for (const auto& s : samples_) out.push_back(s.utilization);
    return out;
}

void UtilizationTrajectory::record(SimTime time, double utilization) {
    check(time, utilization, samples_.empty() ? nullptr : &samples_.back());
    if (!samples_.empty() && samples_.back().time == time) {
        samples_.back().utilization = utilization;
        return;
    }
    samples_.push_back({time, utilization});
}

}  // namespace nimbus
