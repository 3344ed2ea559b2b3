#include "nimbus/scenario/render.hpp"

#include <array>
#include <iomanip>
#include <sstream>

#include "nimbus/util/format.hpp"

namespace nimbus {

namespace {

constexpr std::array<const char*, 7> kHeader = {"Cloudlet ID", "Status",     "Data center ID", "VM ID",
                                                "Time",        "Start Time", "Finish Time"};
constexpr std::array<int, 7> kWidth = {12, 10, 16, 8, 8, 12, 12};

std::string opt_time(const std::optional<double>& v) { return v ? format_time(*v) : "-"; }
std::string opt_full(const std::optional<double>& v) { return v ? format_shortest(*v) : ""; }

std::array<std::string, 7> cells(const CloudletRecord& r) {
    return {std::to_string(r.cloudlet_id),
            std::string(to_string(r.status)),
            r.datacenter ? std::to_string(r.datacenter->value) : "-",
            r.vm ? std::to_string(*r.vm) : "-",
            opt_time(r.time),
            opt_time(r.start),
            opt_time(r.finish)};
}

void row(std::ostringstream& out, const std::array<std::string, 7>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i + 1 == values.size()) {
            out << values[i];
        } else {
            out << std::left << std::setw(kWidth[i]) << values[i];
        }
    }
    out << '\n';
}

}  // namespace

std::string render_summary(const SimulationReport& report) {
    std::ostringstream out;
    if (report.completion_rate) {
        out << "Completion rate: " << format_shortest(*report.completion_rate) << '\n';
    } else {
        out << "Completion rate: undefined (no cloudlets)\n";
    }
    if (report.avg_exec_time) {
        out << "Average execution time: " << format_shortest(*report.avg_exec_time) << '\n';
    } else {
        out << "Average execution time: undefined (no successful cloudlets)\n";
    }
    out << "Total cost: " << format_shortest(report.total_cost) << '\n';
    out << "Energy (J): " << format_shortest(report.energy);
    if (report.unmetered_hosts > 0) out << " (" << report.unmetered_hosts << " hosts without power model)";
    out << '\n';
    out << "Migrations: " << report.migrations << '\n';
    return out.str();
}

std::string render_table(const SimulationReport& report) {
    std::ostringstream out;
    std::array<std::string, 7> header;
    for (std::size_t i = 0; i < header.size(); ++i) header[i] = kHeader[i];
    row(out, header);
    for (const auto& r : report.records) row(out, cells(r));
    out << render_summary(report);
    return out.str();
}

std::string render_csv(const SimulationReport& report) {
    std::ostringstream out;
    out << "cloudlet_id,status,datacenter_id,vm_id,time,start,finish\n";
    for (const auto& r : report.records) {
        out << r.cloudlet_id << ',' << to_string(r.status) << ','
            << (r.datacenter ? std::to_string(r.datacenter->value) : "") << ','
            << (r.vm ? std::to_string(*r.vm) : "") << ',' << opt_full(r.time) << ',' << opt_full(r.start) << ','
            << opt_full(r.finish) << '\n';
    }
    out << "# completion_rate," << opt_full(report.completion_rate) << '\n';
    out << "# avg_exec_time," << opt_full(report.avg_exec_time) << '\n';
    out << "# total_cost," << format_shortest(report.total_cost) << '\n';
    out << "# energy_joules," << format_shortest(report.energy) << '\n';
    out << "# migrations," << report.migrations << '\n';
    return out.str();
}

}  // namespace nimbus
