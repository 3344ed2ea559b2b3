// nimbus: run, sweep and validate cloud datacenter scenarios.
//
//   nimbus run --config scenario_a [--format table|csv] [--output out.txt] [--trace trace.tsv]
//   nimbus sweep --config scenario_a --vms 1..20 --output sweep.csv [--jobs 4]
//   nimbus validate --config my_scenario.json
//
// Exit codes: 0 success, 1 config error, 2 runtime error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "nimbus/scenario/config.hpp"
#include "nimbus/scenario/render.hpp"
#include "nimbus/scenario/runner.hpp"
#include "nimbus/scenario/sweep.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kRuntimeError = 2;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::optional<std::string>& path) {
    if (!path) {
        std::cout << text;
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) throw IoError("cannot write " + *path);
    out << text;
}

int cmd_run(const std::string& config_path, std::optional<std::string> format, std::optional<std::string> output,
            std::optional<std::string> trace_path) {
    const auto cfg = nimbus::parse_scenario(config_path);
    const std::string fmt = format.value_or(cfg.outputs.format);
    if (fmt != "table" && fmt != "csv") throw nimbus::ConfigError("format", fmt, "expected table or csv");
    if (!output) output = cfg.outputs.path;
    if (!trace_path) trace_path = cfg.outputs.trace;

    std::ofstream trace;
    if (trace_path) {
        trace.open(*trace_path, std::ios::binary);
        if (!trace) throw IoError("cannot write " + *trace_path);
    }
    nimbus::ScenarioRun run(cfg);
    if (trace_path) run.simulation().set_trace(&trace);
    const auto report = run.execute();
    for (const auto& note : run.simulation().diagnostics()) std::cerr << "note: " << note << '\n';
    emit(fmt == "csv" ? nimbus::render_csv(report) : nimbus::render_table(report), output);
    return kOk;
}

int cmd_sweep(const std::string& config_path, const std::string& range, const std::string& output, unsigned jobs) {
    nimbus::SweepSpec spec;
    spec.base = nimbus::parse_scenario(config_path);
    std::tie(spec.vm_min, spec.vm_max) = nimbus::parse_vm_range(range);
    const auto rows = nimbus::sweep(spec, jobs);
    bool failed = false;
    for (const auto& row : rows) {
        if (row.error) {
            failed = true;
            std::cerr << "vm_count " << row.vm_count << " failed: " << *row.error << '\n';
        }
    }
    emit(nimbus::render_sweep_csv(rows), output);
    return failed ? kRuntimeError : kOk;
}

int cmd_validate(const std::string& config_path) {
    const auto cfg = nimbus::parse_scenario(config_path);
    std::cout << cfg.name << ": ok (" << cfg.datacenters.size() << " datacenters, " << cfg.vms.count << " vms, "
              << cfg.cloudlets.count << " cloudlets)\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nimbus: deterministic cloud datacenter simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::string> format;
    std::optional<std::string> output;
    std::optional<std::string> trace;
    auto* run = app.add_subcommand("run", "Run one scenario and print its results table");
    run->add_option("--config", config_path, "Scenario file or bundled scenario name")->required();
    run->add_option("--format", format, "table or csv")->check(CLI::IsMember({"table", "csv"}));
    run->add_option("--output", output, "Write results here instead of stdout");
    run->add_option("--trace", trace, "Write a tab-separated event trace");

    std::string range;
    std::string sweep_output;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    auto* sweep = app.add_subcommand("sweep", "Run the scenario once per VM count");
    sweep->add_option("--config", config_path, "Scenario file or bundled scenario name")->required();
    sweep->add_option("--vms", range, "Inclusive VM count range lo..hi")->required();
    sweep->add_option("--output", sweep_output, "CSV destination")->required();
    sweep->add_option("--jobs", jobs, "Concurrent simulations")->check(CLI::PositiveNumber);

    auto* validate = app.add_subcommand("validate", "Check a scenario file against the schema");
    validate->add_option("--config", config_path, "Scenario file or bundled scenario name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (*run) return cmd_run(config_path, format, output, trace);
        if (*sweep) return cmd_sweep(config_path, range, sweep_output, jobs);
        if (*validate) return cmd_validate(config_path);
    } catch (const nimbus::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
    return kOk;
}
