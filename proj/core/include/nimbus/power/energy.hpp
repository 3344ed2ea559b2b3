#pragma once

#include <span>

#include "nimbus/power/power_model.hpp"
#include "nimbus/power/utilization_history.hpp"

namespace nimbus {

/// Integral of the power draw over a piecewise-constant utilization
/// trajectory from its first sample to `end`, in joules.
double energy_joules(const PowerModel& model, std::span<const UtilizationSample> trajectory, SimTime end);

}  // namespace nimbus
