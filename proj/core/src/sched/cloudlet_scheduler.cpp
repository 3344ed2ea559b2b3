#include "nimbus/sched/cloudlet_scheduler.hpp"

#include <algorithm>

#include "nimbus/kernel/simulation.hpp"
#include "nimbus/util/format.hpp"

namespace nimbus {

namespace {

// Remaining work below this fraction of the length counts as done; absorbs
// rounding in share * dt.
constexpr double kDoneFraction = 1e-9;

bool finished(const ExecSlot& slot) { return slot.remaining <= kDoneFraction * slot.cloudlet.length; }

}  // namespace

CloudletScheduler::CloudletScheduler(SchedulingPolicy policy, double mips_per_pe, int pe_count)
    : policy_(policy), mips_(mips_per_pe), pe_count_(pe_count) {
    if (!(mips_ > 0.0)) throw ContractViolation("scheduler mips must be positive");
    if (pe_count_ < 1) throw ContractViolation("scheduler needs at least one PE");
}

std::vector<Cloudlet> CloudletScheduler::submit(Cloudlet cloudlet, SimTime now) {
    auto done = advance(now);
    if (cloudlet.status() == CloudletStatus::Created) cloudlet.advance(CloudletStatus::Queued);
    ExecSlot slot{std::move(cloudlet), 0.0, 0.0};
    slot.remaining = slot.cloudlet.length;
    if (policy_ == SchedulingPolicy::TimeShared) {
        slot.cloudlet.advance(CloudletStatus::InExec);
        slot.cloudlet.exec_start = now;
        running_.push_back(std::move(slot));
    } else {
        waiting_.push_back(std::move(slot));
    }
    promote(now);
    reshare();
    return done;
}

std::vector<Cloudlet> CloudletScheduler::update(SimTime now) {
    auto done = advance(now);
    promote(now);
    reshare();
    return done;
}

std::vector<Cloudlet> CloudletScheduler::advance(SimTime now) {
    if (now < last_update_) {
        throw ContractViolation("scheduler update moves backwards: " + format_shortest(now) + " < " +
                                format_shortest(last_update_));
    }
    const double dt = now - last_update_;
    last_update_ = now;
    std::vector<Cloudlet> done;
    if (dt > 0.0) {
        for (auto& slot : running_) {
            const double work = slot.share * dt;
            processed_ += std::min(work, slot.remaining);
            slot.remaining = std::max(0.0, slot.remaining - work);
        }
    }
    auto split = std::stable_partition(running_.begin(), running_.end(),
                                       [](const ExecSlot& s) { return !finished(s); });
    for (auto it = split; it != running_.end(); ++it) {
        processed_ += it->remaining;
        it->cloudlet.advance(CloudletStatus::Success);
        it->cloudlet.finish = now;
        done.push_back(std::move(it->cloudlet));
    }
    running_.erase(split, running_.end());
    return done;
}

void CloudletScheduler::promote(SimTime now) {
    if (policy_ != SchedulingPolicy::SpaceShared) return;
    while (!waiting_.empty() && static_cast<int>(running_.size()) < pe_count_) {
        ExecSlot slot = std::move(waiting_.front());
        waiting_.pop_front();
        slot.cloudlet.advance(CloudletStatus::InExec);
        slot.cloudlet.exec_start = now;
        running_.push_back(std::move(slot));
    }
}

void CloudletScheduler::reshare() {
    if (running_.empty()) return;
    double share = mips_;
    if (policy_ == SchedulingPolicy::TimeShared) {
        const auto n = static_cast<double>(std::max<std::size_t>(running_.size(), pe_count_));
        share = capacity() / n;
    }
    for (auto& slot : running_) slot.share = share;
}

std::optional<SimTime> CloudletScheduler::next_completion() const {
    std::optional<SimTime> best;
    for (const auto& slot : running_) {
        if (!(slot.share > 0.0)) continue;
        const SimTime t = last_update_ + slot.remaining / slot.share;
        if (!best || t < *best) best = t;
    }
    return best;
}

double CloudletScheduler::granted_mips() const {
    double total = 0.0;
    for (const auto& slot : running_) total += slot.share;
    return total;
}

}  // namespace nimbus
