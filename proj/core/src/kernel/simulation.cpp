#include "nimbus/kernel/simulation.hpp"

#include <algorithm>
#include <string>

#include "nimbus/util/format.hpp"

namespace nimbus {

std::string_view to_string(Tag tag) {
    switch (tag) {
        case Tag::Register: return "REGISTER";
        case Tag::QueryProviders: return "QUERY_PROVIDERS";
        case Tag::ProviderList: return "PROVIDER_LIST";
        case Tag::CreateVm: return "CREATE_VM";
        case Tag::CreateVmAck: return "CREATE_VM_ACK";
        case Tag::SubmitCloudlet: return "SUBMIT_CLOUDLET";
        case Tag::CloudletDone: return "CLOUDLET_DONE";
        case Tag::UpdateProcessing: return "UPDATE_PROCESSING";
        case Tag::DestroyVm: return "DESTROY_VM";
        case Tag::Consolidate: return "CONSOLIDATE";
        case Tag::End: return "END";
        case Tag::User: return "USER";
    }
    return "UNKNOWN";
}

std::string_view to_string(Phase phase) {
    switch (phase) {
        case Phase::Created: return "Created";
        case Phase::Running: return "Running";
        case Phase::Paused: return "Paused";
        case Phase::Finished: return "Finished";
    }
    return "Unknown";
}

namespace {

// Occupies id 0. End events are addressed here; the kernel itself stops on them.
class Manager final : public Entity {
public:
    Manager() : Entity("manager") {}
    void process(const Event&) override {}
};

}  // namespace

Simulation::Simulation() = default;
Simulation::~Simulation() = default;

void Simulation::init(std::unique_ptr<Entity> information_service) {
    if (initialized_) throw UsageError("simulation already initialized");
    if (!information_service) throw ContractViolation("information service must not be null");
    initialized_ = true;
    add(std::make_unique<Manager>());
    add(std::move(information_service));
}

EntityId Simulation::add(std::unique_ptr<Entity> entity) {
    if (!initialized_) throw UsageError("init() must be called before creating entities");
    if (phase_ != Phase::Created) throw UsageError("entities can only be added before the run starts");
    EntityId id{static_cast<std::uint32_t>(entities_.size())};
    entity->id_ = id;
    entity->sim_ = this;
    entities_.push_back(std::move(entity));
    return id;
}

void Simulation::remove(EntityId id) {
    if (id.value >= entities_.size()) throw RoutingError("cannot remove unknown entity " + std::to_string(id.value));
    entities_[id.value].reset();
}

Entity* Simulation::find(EntityId id) const {
    if (id.value >= entities_.size()) return nullptr;
    return entities_[id.value].get();
}

std::uint64_t Simulation::schedule(SimTime delay, EntityId src, EntityId dst, Tag tag, std::any payload) {
    if (!(delay >= 0.0)) throw ContractViolation("negative event delay " + format_shortest(delay));
    return enqueue(clock_ + delay, src, dst, tag, std::move(payload));
}

std::uint64_t Simulation::schedule_at(SimTime time, EntityId src, EntityId dst, Tag tag, std::any payload) {
    if (!(time >= clock_)) throw ContractViolation("event time " + format_shortest(time) + " precedes the clock");
    return enqueue(time, src, dst, tag, std::move(payload));
}

std::uint64_t Simulation::enqueue(SimTime time, EntityId src, EntityId dst, Tag tag, std::any payload) {
    if (dst.value >= entities_.size()) throw RoutingError("no entity with id " + std::to_string(dst.value));
    const std::uint64_t seq = next_seq_++;
    queue_.push(Event{time, seq, src, dst, tag, std::move(payload)});
    live_.insert(seq);
    return seq;
}

void Simulation::cancel(std::uint64_t seq) {
    if (live_.erase(seq) != 0) canceled_.insert(seq);
}

void Simulation::pause_at(SimTime t) {
    if (phase_ == Phase::Finished) throw UsageError("cannot pause a finished simulation");
    if (!(t > clock_)) throw ContractViolation("pause time must lie after the current clock");
    pause_point_ = t;
}

SimTime Simulation::run() {
    if (!initialized_) throw UsageError("run() before init()");
    switch (phase_) {
        case Phase::Created:
            phase_ = Phase::Running;
            start_entities();
            return drain();
        case Phase::Paused:
            phase_ = Phase::Running;
            return drain();
        case Phase::Running: throw UsageError("simulation is already running");
        case Phase::Finished: throw UsageError("simulation has finished");
    }
    return clock_;
}

SimTime Simulation::resume() {
    switch (phase_) {
        case Phase::Paused: return run();
        case Phase::Finished: return clock_;
        case Phase::Running: throw UsageError("resume() while running");
        case Phase::Created: throw UsageError("resume() before run()");
    }
    return clock_;
}

void Simulation::start_entities() {
    // Entities cannot be added after this point, so indices stay valid.
    for (auto& entity : entities_) {
        if (entity) entity->start();
    }
}

SimTime Simulation::drain() {
    while (!queue_.empty()) {
        if (canceled_.erase(queue_.top().seq) != 0) {
            queue_.pop();
            continue;
        }
        if (pause_point_ && queue_.top().time > *pause_point_) {
            clock_ = std::max(clock_, *pause_point_);
            pause_point_.reset();
            phase_ = Phase::Paused;
            return clock_;
        }
        Event ev = queue_.top();
        queue_.pop();
        live_.erase(ev.seq);
        clock_ = ev.time;
        ++delivered_;
        if (trace_) {
            *trace_ << format_shortest(ev.time) << '\t' << ev.src.value << '\t' << ev.dst.value << '\t'
                    << to_string(ev.tag) << '\n';
        }
        Entity* dst = find(ev.dst);
        if (dst == nullptr) {
            warn("routing error: " + std::string(to_string(ev.tag)) + " to removed entity " +
                 std::to_string(ev.dst.value) + " at " + format_shortest(ev.time));
            continue;
        }
        dst->process(ev);
        if (ev.tag == Tag::End) break;
    }
    pause_point_.reset();
    phase_ = Phase::Finished;
    return clock_;
}

}  // namespace nimbus
