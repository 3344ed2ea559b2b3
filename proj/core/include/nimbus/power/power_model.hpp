#pragma once

namespace nimbus {

/// Linear host power model: draw(u) = p_idle + (p_max - p_idle) * u.
struct PowerModel {
    double p_idle = 0.0;  // watts
    double p_max = 0.0;   // watts

    PowerModel() = default;
    PowerModel(double idle, double max);

    /// Throws ContractViolation for u outside [0, 1].
    double draw(double utilization) const;

    bool operator==(const PowerModel&) const = default;
};

inline double power_draw(const PowerModel& model, double utilization) { return model.draw(utilization); }

}  // namespace nimbus
