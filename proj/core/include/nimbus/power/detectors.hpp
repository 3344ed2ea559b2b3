#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "nimbus/power/utilization_history.hpp"
#include "nimbus/sched/host_pool.hpp"

namespace nimbus {

/// Median; even-length input averages the two middle order statistics.
/// Throws ContractViolation on empty input.
double median(std::span<const double> values);

/// Median absolute deviation from the median.
double median_absolute_deviation(std::span<const double> values);

/// 1 - s * MAD over the history; nullopt (abstain) with fewer than 2 samples.
std::optional<double> mad_threshold(const UtilizationHistory& history, double s);

/// Least-squares line through the last `window` samples, evaluated
/// `horizon` seconds after the newest one. nullopt (abstain) with fewer than
/// `window` samples or when all sample times coincide.
std::optional<double> lr_predict(const UtilizationHistory& history, std::size_t window, SimTime horizon);

/// Minimum-migration-time pick: smallest ram / bw, ties to the lowest id.
/// nullopt for an empty list.
std::optional<int> select_vm_mmt(std::span<const VmDemand> vms);

struct MadDetector {
    double s = 2.5;
    bool operator==(const MadDetector&) const = default;
};

struct LrDetector {
    double safety = 1.2;
    std::size_t window = 10;
    bool operator==(const LrDetector&) const = default;
};

using OverloadDetector = std::variant<MadDetector, LrDetector>;

enum class VmSelector { MinimumMigrationTime };

struct ConsolidationConfig {
    OverloadDetector detector = MadDetector{};
    VmSelector selector = VmSelector::MinimumMigrationTime;
    SimTime epoch = 300.0;

    /// Throws ContractViolation unless s > 0, safety >= 1, window >= 2, epoch > 0.
    void validate() const;

    bool operator==(const ConsolidationConfig&) const = default;
};

}  // namespace nimbus
