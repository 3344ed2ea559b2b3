#include "nimbus/power/detectors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "nimbus/kernel/simulation.hpp"

namespace nimbus {

double median(std::span<const double> values) {
    if (values.empty()) throw ContractViolation("median of an empty series");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    if (n % 2 == 1) return sorted[n / 2];
    return (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
}

double median_absolute_deviation(std::span<const double> values) {
    const double m = median(values);
    std::vector<double> dev;
    dev.reserve(values.size());
    for (double v : values) dev.push_back(std::fabs(v - m));
    return median(dev);
}

std::optional<double> mad_threshold(const UtilizationHistory& history, double s) {
    if (history.size() < 2) return std::nullopt;
    const auto values = history.values();
    return 1.0 - s * median_absolute_deviation(values);
}

std::optional<double> lr_predict(const UtilizationHistory& history, std::size_t window, SimTime horizon) {
    if (window < 2 || history.size() < window) return std::nullopt;
    const auto& samples = history.samples();
    const auto first = samples.end() - static_cast<std::ptrdiff_t>(window);

    // Center on the means before forming the normal equations.
    double mean_t = 0.0;
    double mean_u = 0.0;
    for (auto it = first; it != samples.end(); ++it) {
        mean_t += it->time;
        mean_u += it->utilization;
    }
    const auto n = static_cast<double>(window);
    mean_t /= n;
    mean_u /= n;

    double sxx = 0.0;
    double sxy = 0.0;
    for (auto it = first; it != samples.end(); ++it) {
        const double dt = it->time - mean_t;
        sxx += dt * dt;
        sxy += dt * (it->utilization - mean_u);
    }
    if (sxx == 0.0) return std::nullopt;
    const double slope = sxy / sxx;
    const SimTime at = samples.back().time + horizon;
    return mean_u + slope * (at - mean_t);
}

std::optional<int> select_vm_mmt(std::span<const VmDemand> vms) {
    const VmDemand* best = nullptr;
    auto key = [](const VmDemand& v) {
        const double ratio = v.bw > 0 ? static_cast<double>(v.ram) / static_cast<double>(v.bw)
                                      : std::numeric_limits<double>::infinity();
        return std::make_tuple(ratio, v.vm_id);
    };
    for (const auto& vm : vms) {
        if (!best || key(vm) < key(*best)) best = &vm;
    }
    if (!best) return std::nullopt;
    return best->vm_id;
}

void ConsolidationConfig::validate() const {
    if (!(epoch > 0.0)) throw ContractViolation("consolidation epoch must be positive");
    if (const auto* mad = std::get_if<MadDetector>(&detector)) {
        if (!(mad->s > 0.0)) throw ContractViolation("MAD safety parameter s must be positive");
    } else {
        const auto& lr = std::get<LrDetector>(detector);
        if (!(lr.safety >= 1.0)) throw ContractViolation("LR safety must be >= 1");
        if (lr.window < 2) throw ContractViolation("LR window must be >= 2");
    }
}

}  // namespace nimbus
