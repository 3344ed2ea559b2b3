#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nimbus/scenario/config.hpp"
#include "nimbus/scenario/render.hpp"
#include "nimbus/scenario/runner.hpp"
#include "nimbus/scenario/sweep.hpp"
#include "support/oracles.hpp"

using namespace nimbus;

namespace {

std::string squeeze(const std::string& line) {
    std::istringstream in(line);
    std::string word, out;
    while (in >> word) out += (out.empty() ? "" : " ") + word;
    return out;
}

std::vector<std::string> squeezed_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(squeeze(line));
    return lines;
}

bool contains(const std::vector<std::string>& lines, const std::string& want) {
    return std::find(lines.begin(), lines.end(), want) != lines.end();
}

std::string minimal(const std::string& extra_cloudlets = R"({"count": 2, "length": 1000, "file_size": 300})") {
    return R"({"datacenters": [{"hosts": [{"pe_count": 2}]}], "vms": {"count": 1}, "cloudlets": )" +
           extra_cloudlets + "}";
}

ScenarioConfig ample(int cloudlets) {
    ScenarioConfig cfg;
    DatacenterConfig dc;
    HostConfig h;
    h.pe_count = 64;
    h.ram = 1 << 20;
    h.bw = 1 << 24;
    dc.hosts = {h};
    cfg.datacenters = {dc};
    cfg.vms.count = 1;
    cfg.cloudlets.count = cloudlets;
    return cfg;
}

}  // namespace

TEST(Config, BundledScenarioParses) {
    const auto cfg = parse_scenario("scenario_a");
    EXPECT_EQ(cfg.name, "scenario_a");
    ASSERT_EQ(cfg.datacenters.size(), 2u);
    EXPECT_EQ(cfg.datacenters[0].hosts.size(), 2u);
    EXPECT_EQ(cfg.datacenters[0].hosts[0].pe_count, 4);
    EXPECT_EQ(cfg.datacenters[1].characteristics.prices.per_cpu_second, 3.0);
    EXPECT_EQ(cfg.vms.count, 20);
    EXPECT_EQ(cfg.cloudlets.count, 40);
    EXPECT_EQ(parse_scenario("scenario_b").cloudlets.count, 160);
}

TEST(Config, DefaultsFillOmittedFields) {
    const auto cfg = parse_scenario_text(minimal());
    EXPECT_EQ(cfg.hop_latency, 0.1);
    EXPECT_EQ(cfg.vms.mips, 1000.0);
    EXPECT_EQ(cfg.cloudlets.output_size, 300);
    EXPECT_EQ(cfg.outputs.format, "table");
    EXPECT_FALSE(cfg.power);
}

TEST(Config, EmptyWorkloadIsValid) {
    const auto cfg = parse_scenario_text(minimal(R"({"count": 0, "length": 1000, "file_size": 300})"));
    const auto report = run_scenario(cfg);
    EXPECT_TRUE(report.records.empty());
    const auto summary = render_summary(report);
    EXPECT_NE(summary.find("Completion rate: undefined"), std::string::npos);
    EXPECT_NE(summary.find("Average execution time: undefined"), std::string::npos);
}

TEST(Config, NegativeLengthNamesTheKey) {
    try {
        parse_scenario_text(minimal(R"({"count": 2, "length": -5, "file_size": 300})"));
        FAIL() << "accepted a negative length";
    } catch (const ConfigError& e) {
        EXPECT_EQ(e.key(), "cloudlets.length");
        EXPECT_EQ(e.value(), "-5");
    }
}

TEST(Config, UnknownKeyRejected) {
    try {
        parse_scenario_text(R"({"datacenters": [{"hosts": [{"pe_count": 2, "cores": 3}]}], "vms": {"count": 1}})");
        FAIL() << "accepted an unknown key";
    } catch (const ConfigError& e) {
        EXPECT_EQ(e.key(), "datacenters[0].hosts[0].cores");
    }
}

TEST(Config, MalformedInputs) {
    EXPECT_THROW(parse_scenario_text("{"), ConfigError);
    EXPECT_THROW(parse_scenario_text(R"({"vms": {"count": 1}})"), ConfigError);
    EXPECT_THROW(parse_scenario_text(minimal(R"({"count": 2.5, "length": 1000, "file_size": 300})")), ConfigError);
    EXPECT_THROW(parse_scenario("no/such/file.json"), ConfigError);
    EXPECT_THROW(
        parse_scenario_text(R"({"datacenters": [{"hosts": [{"vm_scheduler": "lottery"}]}], "vms": {"count": 1}})"),
        ConfigError);
    EXPECT_THROW(parse_scenario_text(R"({"datacenters": [], "vms": {"count": 1}, "power": {"detector": {"type": "lr", "safety": 0.5}}})"),
                 ConfigError);
}

TEST(Config, EmitParseRoundTrip) {
    for (const char* name : {"scenario_a", "scenario_b"}) {
        const auto cfg = parse_scenario(name);
        EXPECT_EQ(parse_scenario_text(emit_scenario(cfg)), cfg);
    }
    auto cfg = parse_scenario("scenario_a");
    ConsolidationConfig power;
    power.detector = LrDetector{1.3, 6};
    power.epoch = 120.0;
    cfg.power = power;
    cfg.outputs.path = "out.csv";
    cfg.datacenters[0].hosts[1].power.reset();
    cfg.datacenters[1].hosts[0].vm_scheduler = SchedulingPolicy::SpaceShared;
    EXPECT_EQ(parse_scenario_text(emit_scenario(cfg)), cfg);
}

TEST(Render, TableOneRows) {
    const auto lines = squeezed_lines(render_table(run_scenario(parse_scenario("scenario_a"))));
    EXPECT_EQ(lines[0], "Cloudlet ID Status Data center ID VM ID Time Start Time Finish Time");
    EXPECT_TRUE(contains(lines, "4 SUCCESS 2 4 3 0.2 3.2"));
    EXPECT_TRUE(contains(lines, "11 SUCCESS 3 11 3 0.2 3.2"));
    EXPECT_TRUE(contains(lines, "0 SUCCESS 2 0 4 0.2 4.2"));
    EXPECT_TRUE(contains(lines, "Completion rate: 1"));
    EXPECT_TRUE(contains(lines, "Average execution time: 3.4"));
}

TEST(Render, TableTwoRows) {
    const auto lines = squeezed_lines(render_table(run_scenario(parse_scenario("scenario_b"))));
    EXPECT_TRUE(contains(lines, "0 SUCCESS 2 0 14 0.2 14.2"));
    EXPECT_TRUE(contains(lines, "4 SUCCESS 2 4 13 0.2 13.2"));
    EXPECT_EQ(lines.size(), 1u + 160u + 5u);
}

TEST(Render, CsvHasTrailers) {
    const auto csv = render_csv(run_scenario(parse_scenario("scenario_a")));
    EXPECT_EQ(csv.rfind("cloudlet_id,status,datacenter_id,vm_id,time,start,finish\n", 0), 0u);
    EXPECT_NE(csv.find("\n# completion_rate,1\n"), std::string::npos);
    EXPECT_NE(csv.find("\n# migrations,0\n"), std::string::npos);
}

TEST(Sweep, RangeParsing) {
    EXPECT_EQ(parse_vm_range("1..20"), (std::pair<int, int>{1, 20}));
    EXPECT_EQ(parse_vm_range("7..7"), (std::pair<int, int>{7, 7}));
    for (const char* bad : {"0..3", "5..2", "1-20", "..4", "a..b", "3.."}) {
        EXPECT_THROW(parse_vm_range(bad), ConfigError) << bad;
    }
}

TEST(Sweep, BundledHostsSaturateAtTwelve) {
    SweepSpec spec{10, 16, parse_scenario("scenario_a")};
    const auto rows = sweep(spec, 2);
    ASSERT_EQ(rows.size(), 7u);
    EXPECT_DOUBLE_EQ(*rows[2].avg_exec_time, 3.4);
    for (std::size_t i = 3; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].avg_exec_time, rows[2].avg_exec_time);
        EXPECT_EQ(rows[i].completion_rate, 1.0);
    }
}

TEST(Sweep, MatchesRoundRobinOracle) {
    SweepSpec spec{1, 20, ample(40)};
    const auto rows = sweep(spec, 4);
    for (const auto& row : rows) {
        ASSERT_FALSE(row.error);
        EXPECT_NEAR(*row.avg_exec_time, oracle::round_robin_mean_time(40, row.vm_count, 1000.0, 1000.0), 1e-9)
            << row.vm_count;
    }
}

TEST(Sweep, ParallelEqualsSerial) {
    SweepSpec spec{1, 12, parse_scenario("scenario_b")};
    EXPECT_EQ(sweep(spec, 1), sweep(spec, 6));
}

TEST(Sweep, CsvMarksUndefined) {
    std::vector<SweepRow> rows{{1, 3.5, 1.0, std::nullopt}, {2, std::nullopt, 0.0, std::nullopt}};
    EXPECT_EQ(render_sweep_csv(rows), "vm_count,avg_exec_time,completion_rate\n1,3.5,1\n2,NA,0\n");
}

#ifdef NIMBUS_CLI_PATH
namespace {

int cli(const std::string& args) {
    const std::string cmd = std::string("\"") + NIMBUS_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Cli, ExitCodes) {
    const auto dir = std::filesystem::temp_directory_path() / "nimbus_cli_test";
    std::filesystem::create_directories(dir);
    EXPECT_EQ(cli("validate --config scenario_a"), 0);
    EXPECT_EQ(cli("run --config scenario_a --format csv --output " + (dir / "a.csv").string()), 0);
    EXPECT_TRUE(std::filesystem::exists(dir / "a.csv"));
    EXPECT_EQ(cli("run --config " + (dir / "missing.json").string()), 1);
    EXPECT_EQ(cli("run"), 1);
    EXPECT_EQ(cli("sweep --config scenario_a --vms 3..1 --output " + (dir / "s.csv").string()), 1);

    std::ofstream(dir / "bad.json") << R"({"datacenters": [], "vms": {"count": 1}, "extra": 1})";
    EXPECT_EQ(cli("validate --config " + (dir / "bad.json").string()), 1);
    EXPECT_EQ(cli("run --config scenario_a --output " + (dir / "no_dir" / "x.txt").string()), 2);
    std::filesystem::remove_all(dir);
}
#endif
