#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "nimbus/kernel/event.hpp"

namespace nimbus {

class Simulation;

/// Calling a lifecycle operation in the wrong phase.
class UsageError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Scheduling an event with a negative delay or other broken precondition.
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Addressing an entity that was never registered.
class RoutingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Entity {
public:
    explicit Entity(std::string name) : name_(std::move(name)) {}
    virtual ~Entity() = default;

    Entity(const Entity&) = delete;
    Entity& operator=(const Entity&) = delete;

    EntityId id() const { return id_; }
    const std::string& name() const { return name_; }

    /// Invoked once, in id order, when the simulation first starts running.
    virtual void start() {}
    virtual void process(const Event& ev) = 0;

protected:
    Simulation& sim() const { return *sim_; }

private:
    friend class Simulation;
    std::string name_;
    EntityId id_;
    Simulation* sim_ = nullptr;
};

enum class Phase : std::uint8_t { Created, Running, Paused, Finished };

std::string_view to_string(Phase phase);

/// Deterministic single-threaded discrete-event kernel.
///
/// Id 0 is the kernel's own manager entity and id 1 the information service
/// passed to init(); user entities are numbered from 2 in creation order.
class Simulation {
public:
    Simulation();
    ~Simulation();

    Simulation(const Simulation&) = delete;
    Simulation& operator=(const Simulation&) = delete;

    /// Registers the reserved entities. Must precede any add() call.
    void init(std::unique_ptr<Entity> information_service);

    EntityId add(std::unique_ptr<Entity> entity);

    template <class T, class... Args>
    T& create(Args&&... args) {
        auto owned = std::make_unique<T>(std::forward<Args>(args)...);
        T& ref = *owned;
        add(std::move(owned));
        return ref;
    }

    /// Drops an entity; events still addressed to it are recorded as routing
    /// errors on delivery and skipped.
    void remove(EntityId id);

    Entity* find(EntityId id) const;

    /// Enqueues an event at clock() + delay and returns its sequence number.
    std::uint64_t schedule(SimTime delay, EntityId src, EntityId dst, Tag tag, std::any payload = {});

    /// Same as schedule() but at an absolute time, which must not precede clock().
    std::uint64_t schedule_at(SimTime time, EntityId src, EntityId dst, Tag tag, std::any payload = {});

    /// Lazily cancels a pending event; a no-op for already delivered ones.
    void cancel(std::uint64_t seq);

    /// Runs until the queue drains, an End event is delivered, or a pause
    /// point is reached. Returns the clock.
    SimTime run();

    /// Halts the next run before delivering any event later than t.
    void pause_at(SimTime t);

    /// Continues a paused run from the identical queue state.
    SimTime resume();

    SimTime clock() const { return clock_; }
    Phase phase() const { return phase_; }
    std::size_t pending() const { return live_.size(); }
    std::uint64_t delivered() const { return delivered_; }
    std::size_t entity_count() const { return entities_.size(); }

    /// Tab-separated trace: time, src, dst, tag. One line per delivered event.
    void set_trace(std::ostream* out) { trace_ = out; }

    void warn(std::string message) { diagnostics_.push_back(std::move(message)); }
    const std::vector<std::string>& diagnostics() const { return diagnostics_; }

private:
    std::uint64_t enqueue(SimTime time, EntityId src, EntityId dst, Tag tag, std::any payload);
    void start_entities();
    SimTime drain();

    std::vector<std::unique_ptr<Entity>> entities_;
    std::priority_queue<Event, std::vector<Event>, EventLater> queue_;
    std::unordered_set<std::uint64_t> live_;
    std::unordered_set<std::uint64_t> canceled_;
    std::optional<SimTime> pause_point_;
    std::vector<std::string> diagnostics_;
    std::ostream* trace_ = nullptr;
    SimTime clock_ = 0.0;
    std::uint64_t next_seq_ = 0;
    std::uint64_t delivered_ = 0;
    Phase phase_ = Phase::Created;
    bool initialized_ = false;
};

}  // namespace nimbus
