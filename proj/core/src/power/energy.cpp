#include "nimbus/power/energy.hpp"

#include <algorithm>

namespace nimbus {

double energy_joules(const PowerModel& model, std::span<const UtilizationSample> trajectory, SimTime end) {
    double joules = 0.0;
    for (std::size_t i = 0; i < trajectory.size(); ++i) {
        const SimTime from = trajectory[i].time;
        const SimTime to = std::min(end, i + 1 < trajectory.size() ? trajectory[i + 1].time : end);
        if (to > from) joules += model.draw(trajectory[i].utilization) * (to - from);
    }
    return joules;
}

}  // namespace nimbus
