#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <vector>

#include "nimbus/kernel/event.hpp"

namespace nimbus {

struct UtilizationSample {
    SimTime time = 0.0;
    double utilization = 0.0;

    bool operator==(const UtilizationSample&) const = default;
};

/// Bounded, time-ordered ring of host utilization samples. A sample at the
/// same instant as the newest one replaces it.
class UtilizationHistory {
public:
    static constexpr std::size_t kMinCapacity = 10;

    explicit UtilizationHistory(std::size_t capacity = kMinCapacity);

    void record(SimTime time, double utilization);

    std::size_t size() const { return samples_.size(); }
    std::size_t capacity() const { return capacity_; }
    bool empty() const { return samples_.empty(); }
    const std::deque<UtilizationSample>& samples() const { return samples_; }
    std::optional<UtilizationSample> latest() const;

    std::vector<double> values() const;

private:
    std::size_t capacity_;
    std::deque<UtilizationSample> samples_;
};

/// Unbounded piecewise-constant utilization trajectory, used for energy.
class UtilizationTrajectory {
public:
    void record(SimTime time, double utilization);
    const std::vector<UtilizationSample>& samples() const { return samples_; }

private:
    std::vector<UtilizationSample> samples_;
};

}  // namespace nimbus
