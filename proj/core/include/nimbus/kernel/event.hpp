#pragma once

#include <any>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string_view>

namespace nimbus {

/// Simulated seconds. Nonnegative; the clock never decreases during a run.
using SimTime = double;

/// Identifier of a simulation entity. Assigned sequentially, never reused.
struct EntityId {
    std::uint32_t value = 0;

    constexpr auto operator<=>(const EntityId&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, EntityId id) { return os << id.value; }

inline constexpr EntityId kManagerId{0};
inline constexpr EntityId kInformationServiceId{1};

enum class Tag : std::uint8_t {
    Register,
    QueryProviders,
    ProviderList,
    CreateVm,
    CreateVmAck,
    SubmitCloudlet,
    CloudletDone,
    UpdateProcessing,
    DestroyVm,
    Consolidate,
    End,
    User,
};

std::string_view to_string(Tag tag);

/// A timestamped message between entities. (time, seq) is unique and totally
/// ordered over every event ever enqueued in one simulation.
struct Event {
    SimTime time = 0.0;
    std::uint64_t seq = 0;
    EntityId src;
    EntityId dst;
    Tag tag = Tag::User;
    std::any payload;
};

/// Strict ordering by (time, seq); earlier events compare "greater" so that
/// std::priority_queue pops them first.
struct EventLater {
    bool operator()(const Event& a, const Event& b) const {
        if (a.time != b.time) return a.time > b.time;
        return a.seq > b.seq;
    }
};

}  // namespace nimbus

template <>
struct std::hash<nimbus::EntityId> {
    std::size_t operator()(nimbus::EntityId id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};
