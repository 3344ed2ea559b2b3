#pragma once

#include <string>

namespace nimbus {

/// Shortest decimal text that parses back to the same double.
std::string format_shortest(double value);

/// At most two decimals, trailing zeros (and a bare point) trimmed: 3, 0.2, 12.99.
std::string format_time(double value);

}  // namespace nimbus
