#include "nimbus/power/consolidation.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "nimbus/kernel/simulation.hpp"

namespace nimbus {

double host_utilization(const HostPool& pool, int host, const std::map<int, double>& vm_mips) {
    double granted = 0.0;
    for (const auto& vm : pool.vms_on(host)) {
        if (auto it = vm_mips.find(vm.vm_id); it != vm_mips.end()) granted += it->second;
    }
    return std::clamp(granted / pool.hosts()[static_cast<std::size_t>(host)].total_mips(), 0.0, 1.0);
}

namespace {

// Per-host view for one epoch: the observed level and the utilization moved
// in or out since the epoch began.
class LoadView {
public:
    LoadView(const HostPool& pool, std::span<const UtilizationHistory> histories,
             const std::map<int, double>& vm_mips, const ConsolidationConfig& config)
        : config_(config) {
        for (int h = 0; h < static_cast<int>(pool.size()); ++h) {
            const auto& history = histories[static_cast<std::size_t>(h)];
            Entry e;
            e.current = host_utilization(pool, h, vm_mips);
            if (const auto* mad = std::get_if<MadDetector>(&config.detector)) {
                e.limit = mad_threshold(history, mad->s);
            } else {
                const auto& lr = std::get<LrDetector>(config.detector);
                e.predicted = lr_predict(history, lr.window, config.epoch);
            }
            entries_.push_back(e);
        }
    }

    double current(int h) const { return entries_[idx(h)].current + entries_[idx(h)].delta; }

    /// Overload judgement after adding `extra` utilization to host h.
    bool overloaded(int h, double extra = 0.0) const {
        const Entry& e = entries_[idx(h)];
        if (std::holds_alternative<MadDetector>(config_.detector)) {
            if (!e.limit) return false;
            return e.current + e.delta + extra >= *e.limit;
        }
        if (!e.predicted) return false;
        const double safety = std::get<LrDetector>(config_.detector).safety;
        return safety * (*e.predicted + e.delta + extra) >= 1.0;
    }

    void shift(int h, double du) { entries_[idx(h)].delta += du; }

private:
    struct Entry {
        double current = 0.0;
        double delta = 0.0;
        std::optional<double> limit;
        std::optional<double> predicted;
    };

    static std::size_t idx(int h) { return static_cast<std::size_t>(h); }

    const ConsolidationConfig& config_;
    std::vector<Entry> entries_;
};

double power_increase(const HostSpec& host, double before, double after) {
    if (!host.power) return 0.0;
    return host.power->draw(std::min(after, 1.0)) - host.power->draw(std::min(before, 1.0));
}

}  // namespace

ConsolidationResult consolidate_epoch(HostPool& pool, std::span<const UtilizationHistory> histories,
                                      const std::map<int, double>& vm_mips, const ConsolidationConfig& config) {
    config.validate();
    if (histories.size() != pool.size()) throw ContractViolation("one utilization history per host is required");

    ConsolidationResult result;
    LoadView view(pool, histories, vm_mips, config);
    const auto host_count = static_cast<int>(pool.size());

    auto granted = [&](int vm_id) {
        auto it = vm_mips.find(vm_id);
        return it == vm_mips.end() ? 0.0 : it->second;
    };

    for (int source = 0; source < host_count; ++source) {
        std::vector<int> stuck;
        while (view.overloaded(source)) {
            auto candidates = pool.vms_on(source);
            std::erase_if(candidates, [&](const VmDemand& v) {
                return std::find(stuck.begin(), stuck.end(), v.vm_id) != stuck.end();
            });
            const auto pick = select_vm_mmt(candidates);
            if (!pick) break;
            const VmDemand vm = *std::find_if(candidates.begin(), candidates.end(),
                                              [&](const VmDemand& v) { return v.vm_id == *pick; });
            const double mips = granted(vm.vm_id);

            std::optional<int> target;
            double best_increase = 0.0;
            for (int t = 0; t < host_count; ++t) {
                if (t == source || !pool.fits(t, vm) || view.overloaded(t)) continue;
                const auto& spec = pool.hosts()[static_cast<std::size_t>(t)];
                const double du = mips / spec.total_mips();
                if (view.overloaded(t, du)) continue;
                const double before = view.current(t);
                const double increase = power_increase(spec, before, before + du);
                if (!target || increase < best_increase) {
                    target = t;
                    best_increase = increase;
                }
            }

            if (!target) {
                result.infeasible.push_back("vm " + std::to_string(vm.vm_id) + " on overloaded host " +
                                            std::to_string(source) + " has no feasible target");
                stuck.push_back(vm.vm_id);
                continue;
            }

            pool.release(vm.vm_id);
            pool.place(*target, vm);
            const auto& src_spec = pool.hosts()[static_cast<std::size_t>(source)];
            const auto& dst_spec = pool.hosts()[static_cast<std::size_t>(*target)];
            view.shift(source, -mips / src_spec.total_mips());
            view.shift(*target, mips / dst_spec.total_mips());
            result.migrations.push_back({vm.vm_id, source, *target});
        }
    }
    return result;
}

}  // namespace nimbus
