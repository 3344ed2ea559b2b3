#pragma once

#include <string>

#include "nimbus/metrics/report.hpp"

namespace nimbus {

/// Space-aligned results table followed by the summary lines.
std::string render_table(const SimulationReport& report);

/// `Completion rate: ...`, `Average execution time: ...`, then cost, energy
/// and migration lines.
std::string render_summary(const SimulationReport& report);

/// CSV records plus `#`-prefixed summary trailer lines.
std::string render_csv(const SimulationReport& report);

}  // namespace nimbus
