#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "nimbus/entities/cloudlet.hpp"
#include "nimbus/entities/vm.hpp"

namespace nimbus {

/// A cloudlet in execution together with its remaining work and current rate.
struct ExecSlot {
    Cloudlet cloudlet;
    double remaining = 0.0;  // MI
    double share = 0.0;      // MIPS currently granted
};

/// Execution policy for the cloudlets of one VM.
///
/// Time-shared: every running cloudlet receives capacity / max(n, pe_count),
/// so no cloudlet ever runs faster than one PE. Nothing waits.
/// Space-shared: at most pe_count cloudlets run, each on a whole PE; the rest
/// wait in FIFO order and are promoted as PEs free up.
///
/// The scheduler is a pure state machine: the owner calls update() at every
/// arrival and at every completion estimate it returns.
class CloudletScheduler {
public:
    CloudletScheduler(SchedulingPolicy policy, double mips_per_pe, int pe_count);

    /// Brings progress up to `now`, then admits the cloudlet. Returns the
    /// cloudlets that completed during the catch-up.
    std::vector<Cloudlet> submit(Cloudlet cloudlet, SimTime now);

    /// Advances every running slot to `now`, retires finished cloudlets
    /// (status Success, finish = now) and recomputes shares.
    std::vector<Cloudlet> update(SimTime now);

    /// Earliest completion among running slots; nullopt when idle.
    std::optional<SimTime> next_completion() const;

    SchedulingPolicy policy() const { return policy_; }
    double capacity() const { return mips_ * pe_count_; }
    double granted_mips() const;
    bool idle() const { return running_.empty() && waiting_.empty(); }
    const std::vector<ExecSlot>& running() const { return running_; }
    const std::deque<ExecSlot>& waiting() const { return waiting_; }

    /// Integral of granted shares over time so far, in MI.
    double processed_mi() const { return processed_; }

private:
    std::vector<Cloudlet> advance(SimTime now);
    void promote(SimTime now);
    void reshare();

    SchedulingPolicy policy_;
    double mips_;
    int pe_count_;
    SimTime last_update_ = 0.0;
    double processed_ = 0.0;
    std::vector<ExecSlot> running_;
    std::deque<ExecSlot> waiting_;
};

}  // namespace nimbus
