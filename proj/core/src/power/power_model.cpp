#include "nimbus/power/power_model.hpp"

#include "nimbus/kernel/simulation.hpp"
#include "nimbus/util/format.hpp"

namespace nimbus {

PowerModel::PowerModel(double idle, double max) : p_idle(idle), p_max(max) {
    if (!(p_idle >= 0.0 && p_idle <= p_max)) throw ContractViolation("power model needs 0 <= p_idle <= p_max");
}

double PowerModel::draw(double utilization) const {
    if (!(utilization >= 0.0 && utilization <= 1.0)) {
        throw ContractViolation("utilization out of [0, 1]: " + format_shortest(utilization));
    }
    return p_idle + (p_max - p_idle) * utilization;
}

}  // namespace nimbus
