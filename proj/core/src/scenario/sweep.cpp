#include "nimbus/scenario/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <sstream>
#include <thread>

#include "nimbus/scenario/runner.hpp"
#include "nimbus/util/format.hpp"

namespace nimbus {

std::pair<int, int> parse_vm_range(std::string_view text) {
    const auto dots = text.find("..");
    auto bad = [&] { return ConfigError("vms", std::string(text), "expected a range lo..hi with 1 <= lo <= hi"); };
    if (dots == std::string_view::npos) throw bad();
    int lo = 0;
    int hi = 0;
    const auto a = text.substr(0, dots);
    const auto b = text.substr(dots + 2);
    auto [pa, ea] = std::from_chars(a.data(), a.data() + a.size(), lo);
    auto [pb, eb] = std::from_chars(b.data(), b.data() + b.size(), hi);
    if (ea != std::errc{} || eb != std::errc{} || pa != a.data() + a.size() || pb != b.data() + b.size()) throw bad();
    if (lo < 1 || hi < lo) throw bad();
    return {lo, hi};
}

namespace {

SweepRow run_one(const ScenarioConfig& base, int vm_count) {
    SweepRow row;
    row.vm_count = vm_count;
    try {
        ScenarioConfig cfg = base;
        cfg.vms.count = vm_count;
        const auto report = run_scenario(cfg);
        row.avg_exec_time = report.avg_exec_time;
        row.completion_rate = report.completion_rate;
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

}  // namespace

std::vector<SweepRow> sweep(const SweepSpec& spec, unsigned jobs) {
    if (spec.vm_min < 1 || spec.vm_max < spec.vm_min) {
        throw ConfigError("vms", std::to_string(spec.vm_min) + ".." + std::to_string(spec.vm_max),
                          "expected a range lo..hi with 1 <= lo <= hi");
    }
    const auto count = static_cast<std::size_t>(spec.vm_max - spec.vm_min + 1);
    std::vector<SweepRow> rows(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            rows[i] = run_one(spec.base, spec.vm_min + static_cast<int>(i));
        }
    };
    const unsigned threads = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(count));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();
    return rows;
}

std::string render_sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "vm_count,avg_exec_time,completion_rate\n";
    for (const auto& r : rows) {
        out << r.vm_count << ',' << (r.avg_exec_time ? format_shortest(*r.avg_exec_time) : "NA") << ','
            << (r.completion_rate ? format_shortest(*r.completion_rate) : "NA") << '\n';
    }
    return out.str();
}

}  // namespace nimbus
