#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "nimbus/kernel/event.hpp"

namespace nimbus {

enum class SchedulingPolicy : std::uint8_t { TimeShared, SpaceShared };

std::string_view to_string(SchedulingPolicy policy);

struct Vm {
    int id = 0;
    EntityId owner;
    double mips = 1000.0;
    int pe_count = 1;
    std::int64_t ram = 512;
    std::int64_t bw = 1000;
    std::int64_t image_size = 10000;
    std::string vmm = "Xen";
    SchedulingPolicy scheduler = SchedulingPolicy::TimeShared;

    double capacity() const { return mips * pe_count; }

    bool operator==(const Vm&) const = default;
};

}  // namespace nimbus
