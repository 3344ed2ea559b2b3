#include "nimbus/scenario/config.hpp"

#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string_view>

#include <json.hpp>

#include "nimbus/kernel/simulation.hpp"

#ifndef NIMBUS_SCENARIO_DIR
#define NIMBUS_SCENARIO_DIR "scenarios"
#endif

namespace nimbus {

using nlohmann::json;

ConfigError::ConfigError(std::string key, std::string value, const std::string& reason)
    : std::runtime_error(key + ": " + reason + (value.empty() ? "" : ", got " + value)),
      key_(std::move(key)),
      value_(std::move(value)) {}

namespace {

// Typed, path-aware access to one JSON object of the scenario document.
class Node {
public:
    Node(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) fail("", "expected an object");
    }

    void only(std::initializer_list<std::string_view> keys) const {
        for (const auto& [key, value] : j_.items()) {
            bool known = false;
            for (auto k : keys) known = known || k == key;
            if (!known) throw ConfigError(join(key), value.dump(), "unknown key");
        }
    }

    bool has(const char* key) const { return j_.contains(key) && !j_.at(key).is_null(); }

    const json& at(const char* key) const {
        if (!has(key)) throw ConfigError(join(key), "", "missing required key");
        return j_.at(key);
    }

    Node object(const char* key) const { return Node(at(key), join(key)); }

    std::int64_t integer(const char* key, std::int64_t min, std::int64_t fallback, bool required = false) const {
        if (!has(key)) {
            if (required) at(key);
            return fallback;
        }
        const json& v = j_.at(key);
        if (!v.is_number_integer()) throw ConfigError(join(key), v.dump(), "expected an integer");
        const auto n = v.get<std::int64_t>();
        if (n < min) throw ConfigError(join(key), v.dump(), "expected an integer >= " + std::to_string(min));
        return n;
    }

    double number(const char* key, double fallback, bool positive, bool required = false) const {
        if (!has(key)) {
            if (required) at(key);
            return fallback;
        }
        const json& v = j_.at(key);
        if (!v.is_number()) throw ConfigError(join(key), v.dump(), "expected a number");
        const double d = v.get<double>();
        if (positive && !(d > 0.0)) throw ConfigError(join(key), v.dump(), "expected a positive number");
        if (!positive && !(d >= 0.0)) throw ConfigError(join(key), v.dump(), "expected a nonnegative number");
        return d;
    }

    std::string text(const char* key, std::string fallback) const {
        if (!has(key)) return fallback;
        const json& v = j_.at(key);
        if (!v.is_string()) throw ConfigError(join(key), v.dump(), "expected a string");
        return v.get<std::string>();
    }

    std::string join(std::string_view key) const {
        return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
    }

    [[noreturn]] void fail(std::string_view key, const std::string& reason) const {
        throw ConfigError(key.empty() ? (path_.empty() ? "(document)" : path_) : join(key), j_.dump(), reason);
    }

private:
    const json& j_;
    std::string path_;
};

SchedulingPolicy parse_policy(const Node& n, const char* key, SchedulingPolicy fallback) {
    if (!n.has(key)) return fallback;
    const std::string name = n.text(key, "");
    if (name == "time_shared") return SchedulingPolicy::TimeShared;
    if (name == "space_shared") return SchedulingPolicy::SpaceShared;
    throw ConfigError(n.join(key), "\"" + name + "\"", "expected \"time_shared\" or \"space_shared\"");
}

HostConfig parse_host(const Node& n) {
    n.only({"pe_count", "mips", "ram", "bw", "storage", "vm_scheduler", "power"});
    HostConfig h;
    h.pe_count = static_cast<int>(n.integer("pe_count", 1, 0, true));
    h.mips = n.number("mips", h.mips, true);
    h.ram = n.integer("ram", 0, h.ram);
    h.bw = n.integer("bw", 0, h.bw);
    h.storage = n.integer("storage", 0, h.storage);
    h.vm_scheduler = parse_policy(n, "vm_scheduler", h.vm_scheduler);
    if (n.has("power")) {
        const Node p = n.object("power");
        p.only({"p_idle", "p_max"});
        const double idle = p.number("p_idle", 0.0, false, true);
        const double max = p.number("p_max", 0.0, false, true);
        if (idle > max) throw ConfigError(p.join("p_idle"), std::to_string(idle), "p_idle must not exceed p_max");
        h.power = PowerModel(idle, max);
    }
    return h;
}

DatacenterConfig parse_datacenter(const Node& n) {
    n.only({"hosts", "characteristics", "vm_allocation"});
    DatacenterConfig dc;
    const json& hosts = n.at("hosts");
    if (!hosts.is_array()) throw ConfigError(n.join("hosts"), hosts.dump(), "expected an array");
    for (std::size_t i = 0; i < hosts.size(); ++i) {
        dc.hosts.push_back(parse_host(Node(hosts[i], n.join("hosts") + "[" + std::to_string(i) + "]")));
    }
    if (n.has("characteristics")) {
        const Node c = n.object("characteristics");
        c.only({"arch", "os", "vmm", "time_zone", "prices"});
        auto& ch = dc.characteristics;
        ch.arch = c.text("arch", ch.arch);
        ch.os = c.text("os", ch.os);
        ch.vmm = c.text("vmm", ch.vmm);
        if (c.has("time_zone")) {
            const json& tz = c.at("time_zone");
            if (!tz.is_number()) throw ConfigError(c.join("time_zone"), tz.dump(), "expected a number");
            ch.time_zone = tz.get<double>();
        }
        if (c.has("prices")) {
            const Node p = c.object("prices");
            p.only({"per_cpu_second", "per_mem_unit", "per_storage_unit", "per_bw_unit"});
            ch.prices.per_cpu_second = p.number("per_cpu_second", 0.0, false);
            ch.prices.per_mem_unit = p.number("per_mem_unit", 0.0, false);
            ch.prices.per_storage_unit = p.number("per_storage_unit", 0.0, false);
            ch.prices.per_bw_unit = p.number("per_bw_unit", 0.0, false);
        }
    }
    if (n.has("vm_allocation")) {
        const std::string name = n.text("vm_allocation", "");
        auto policy = parse_allocation_policy(name);
        if (!policy) throw ConfigError(n.join("vm_allocation"), "\"" + name + "\"", "unknown allocation policy");
        dc.vm_allocation = *policy;
    }
    return dc;
}

VmConfig parse_vms(const Node& n) {
    n.only({"count", "mips", "pe_count", "ram", "bw", "image_size", "vmm", "scheduler"});
    VmConfig v;
    v.count = static_cast<int>(n.integer("count", 0, 0, true));
    v.mips = n.number("mips", v.mips, true);
    v.pe_count = static_cast<int>(n.integer("pe_count", 1, v.pe_count));
    v.ram = n.integer("ram", 0, v.ram);
    v.bw = n.integer("bw", 0, v.bw);
    v.image_size = n.integer("image_size", 0, v.image_size);
    v.vmm = n.text("vmm", v.vmm);
    v.scheduler = parse_policy(n, "scheduler", v.scheduler);
    return v;
}

CloudletConfig parse_cloudlets(const Node& n) {
    n.only({"count", "length", "file_size", "output_size", "pes"});
    CloudletConfig c;
    c.count = static_cast<int>(n.integer("count", 0, 0, true));
    c.length = n.number("length", c.length, true, true);
    c.file_size = n.integer("file_size", 0, c.file_size, true);
    c.output_size = n.integer("output_size", 0, c.output_size);
    c.pes = static_cast<int>(n.integer("pes", 1, c.pes));
    return c;
}

ConsolidationConfig parse_power(const Node& n) {
    n.only({"detector", "selector", "epoch"});
    ConsolidationConfig cfg;
    if (n.has("detector")) {
        const Node d = n.object("detector");
        const std::string type = d.text("type", "mad");
        if (type == "mad") {
            d.only({"type", "s"});
            cfg.detector = MadDetector{d.number("s", 2.5, true)};
        } else if (type == "lr") {
            d.only({"type", "safety", "window"});
            LrDetector lr;
            lr.safety = d.number("safety", lr.safety, true);
            if (lr.safety < 1.0) throw ConfigError(d.join("safety"), d.at("safety").dump(), "expected a number >= 1");
            lr.window = static_cast<std::size_t>(d.integer("window", 2, static_cast<std::int64_t>(lr.window)));
            cfg.detector = lr;
        } else {
            throw ConfigError(d.join("type"), "\"" + type + "\"", "expected \"mad\" or \"lr\"");
        }
    }
    const std::string selector = n.text("selector", "mmt");
    if (selector != "mmt") throw ConfigError(n.join("selector"), "\"" + selector + "\"", "expected \"mmt\"");
    cfg.epoch = n.number("epoch", cfg.epoch, true);
    return cfg;
}

OutputConfig parse_outputs(const Node& n) {
    n.only({"format", "path", "trace"});
    OutputConfig o;
    o.format = n.text("format", o.format);
    if (o.format != "table" && o.format != "csv") {
        throw ConfigError(n.join("format"), "\"" + o.format + "\"", "expected \"table\" or \"csv\"");
    }
    if (n.has("path")) o.path = n.text("path", "");
    if (n.has("trace")) o.trace = n.text("trace", "");
    return o;
}

}  // namespace

ScenarioConfig parse_scenario_text(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("(document)", "", std::string("malformed JSON: ") + e.what());
    }
    const Node root(doc, "");
    root.only({"name", "hop_latency", "datacenters", "vms", "cloudlets", "power", "outputs"});

    ScenarioConfig cfg;
    cfg.name = root.text("name", cfg.name);
    cfg.hop_latency = root.number("hop_latency", cfg.hop_latency, false);
    const json& dcs = root.at("datacenters");
    if (!dcs.is_array()) throw ConfigError("datacenters", dcs.dump(), "expected an array");
    for (std::size_t i = 0; i < dcs.size(); ++i) {
        cfg.datacenters.push_back(parse_datacenter(Node(dcs[i], "datacenters[" + std::to_string(i) + "]")));
    }
    cfg.vms = parse_vms(root.object("vms"));
    if (root.has("cloudlets")) cfg.cloudlets = parse_cloudlets(root.object("cloudlets"));
    if (root.has("power")) cfg.power = parse_power(root.object("power"));
    if (root.has("outputs")) cfg.outputs = parse_outputs(root.object("outputs"));
    return cfg;
}

std::filesystem::path bundled_scenario_dir() {
    if (const char* env = std::getenv("NIMBUS_SCENARIO_DIR"); env && *env) return env;
    return NIMBUS_SCENARIO_DIR;
}

ScenarioConfig parse_scenario(const std::filesystem::path& path) {
    std::filesystem::path resolved = path;
    if (!std::filesystem::exists(resolved) && !path.has_parent_path()) {
        auto bundled = bundled_scenario_dir() / path;
        if (!bundled.has_extension()) bundled += ".json";
        if (std::filesystem::exists(bundled)) resolved = bundled;
    }
    std::ifstream in(resolved);
    if (!in) throw ConfigError("config", path.string(), "cannot open scenario file");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_scenario_text(text.str());
}

namespace {

json emit_host(const HostConfig& h) {
    json j{{"pe_count", h.pe_count}, {"mips", h.mips},       {"ram", h.ram},
           {"bw", h.bw},             {"storage", h.storage}, {"vm_scheduler", to_string(h.vm_scheduler)}};
    if (h.power) j["power"] = {{"p_idle", h.power->p_idle}, {"p_max", h.power->p_max}};
    return j;
}

}  // namespace

std::string emit_scenario(const ScenarioConfig& cfg) {
    json doc;
    doc["name"] = cfg.name;
    doc["hop_latency"] = cfg.hop_latency;
    doc["datacenters"] = json::array();
    for (const auto& dc : cfg.datacenters) {
        json hosts = json::array();
        for (const auto& h : dc.hosts) hosts.push_back(emit_host(h));
        const auto& ch = dc.characteristics;
        doc["datacenters"].push_back({
            {"hosts", hosts},
            {"characteristics",
             {{"arch", ch.arch},
              {"os", ch.os},
              {"vmm", ch.vmm},
              {"time_zone", ch.time_zone},
              {"prices",
               {{"per_cpu_second", ch.prices.per_cpu_second},
                {"per_mem_unit", ch.prices.per_mem_unit},
                {"per_storage_unit", ch.prices.per_storage_unit},
                {"per_bw_unit", ch.prices.per_bw_unit}}}}},
            {"vm_allocation", to_string(dc.vm_allocation)},
        });
    }
    const auto& v = cfg.vms;
    doc["vms"] = {{"count", v.count}, {"mips", v.mips},       {"pe_count", v.pe_count},
                  {"ram", v.ram},     {"bw", v.bw},           {"image_size", v.image_size},
                  {"vmm", v.vmm},     {"scheduler", to_string(v.scheduler)}};
    const auto& c = cfg.cloudlets;
    doc["cloudlets"] = {{"count", c.count},
                        {"length", c.length},
                        {"file_size", c.file_size},
                        {"output_size", c.output_size},
                        {"pes", c.pes}};
    if (cfg.power) {
        json detector;
        if (const auto* mad = std::get_if<MadDetector>(&cfg.power->detector)) {
            detector = {{"type", "mad"}, {"s", mad->s}};
        } else {
            const auto& lr = std::get<LrDetector>(cfg.power->detector);
            detector = {{"type", "lr"}, {"safety", lr.safety}, {"window", lr.window}};
        }
        doc["power"] = {{"detector", detector}, {"selector", "mmt"}, {"epoch", cfg.power->epoch}};
    }
    json outputs{{"format", cfg.outputs.format}};
    if (cfg.outputs.path) outputs["path"] = *cfg.outputs.path;
    if (cfg.outputs.trace) outputs["trace"] = *cfg.outputs.trace;
    doc["outputs"] = outputs;
    return doc.dump(2) + "\n";
}

}  // namespace nimbus
