#include "nimbus/util/format.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace nimbus {

std::string format_shortest(double value) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) return "nan";
    return {buf.data(), end};
}

std::string format_time(double value) {
    std::array<char, 64> buf{};
    int n = std::snprintf(buf.data(), buf.size(), "%.2f", value);
    std::string out(buf.data(), static_cast<std::size_t>(n));
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    if (out == "-0") out = "0";
    return out;
}

}  // namespace nimbus
