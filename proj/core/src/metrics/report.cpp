#include "nimbus/metrics/report.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

namespace nimbus {

CloudletRecord CloudletRecord::of(const Cloudlet& c) {
    CloudletRecord r;
    r.cloudlet_id = c.id;
    r.status = c.status();
    r.datacenter = c.datacenter;
    r.vm = c.vm;
    r.start = c.exec_start;
    r.finish = c.finish;
    if (c.exec_start && c.finish) r.time = *c.finish - *c.exec_start;
    return r;
}

void order_records(std::vector<CloudletRecord>& records) {
    auto key = [](const CloudletRecord& r) {
        return std::make_tuple(r.finish.value_or(std::numeric_limits<double>::infinity()), r.vm.value_or(-1),
                               r.cloudlet_id);
    };
    std::stable_sort(records.begin(), records.end(),
                     [&](const CloudletRecord& a, const CloudletRecord& b) { return key(a) < key(b); });
}

std::optional<double> completion_rate(std::span<const CloudletRecord> records) {
    if (records.empty()) return std::nullopt;
    const auto ok = std::count_if(records.begin(), records.end(),
                                  [](const CloudletRecord& r) { return r.status == CloudletStatus::Success; });
    return static_cast<double>(ok) / static_cast<double>(records.size());
}

std::optional<double> average_execution_time(std::span<const CloudletRecord> records) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& r : records) {
        if (r.status != CloudletStatus::Success || !r.time) continue;
        sum += *r.time;
        ++n;
    }
    if (n == 0) return std::nullopt;
    return sum / static_cast<double>(n);
}

double total_cost(std::span<const CloudletRecord> records, const CostBasis& basis) {
    double cost = 0.0;
    for (const auto& r : records) {
        if (r.status != CloudletStatus::Success || !r.datacenter || !r.vm || !r.time) continue;
        const auto price_it = basis.prices.find(*r.datacenter);
        if (price_it == basis.prices.end()) continue;
        const PriceVector& p = price_it->second;
        const VmResources vm = basis.vms.count(*r.vm) ? basis.vms.at(*r.vm) : VmResources{};
        const CloudletIo io = basis.cloudlets.count(r.cloudlet_id) ? basis.cloudlets.at(r.cloudlet_id) : CloudletIo{};
        cost += p.per_cpu_second * *r.time;
        cost += p.per_bw_unit * static_cast<double>(io.file_size + io.output_size);
        cost += p.per_mem_unit * static_cast<double>(vm.ram) * *r.time;
        cost += p.per_storage_unit * static_cast<double>(vm.image_size);
    }
    return cost;
}

}  // namespace nimbus
