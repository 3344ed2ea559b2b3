#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "nimbus/kernel/simulation.hpp"
#include "nimbus/power/consolidation.hpp"
#include "nimbus/power/detectors.hpp"
#include "nimbus/power/energy.hpp"
#include "nimbus/power/power_model.hpp"
#include "support/oracles.hpp"

using namespace nimbus;

namespace {

UtilizationHistory history_of(const std::vector<double>& values, SimTime step = 300.0) {
    UtilizationHistory h(std::max<std::size_t>(10, values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) h.record(static_cast<double>(i) * step, values[i]);
    return h;
}

std::vector<double> ramp() { return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0}; }

HostSpec host(int id, int pes, PowerModel model) {
    HostSpec h{id, pes};
    h.power = model;
    return h;
}

}  // namespace

TEST(PowerModel, LinearDraw) {
    const PowerModel m(70.0, 250.0);
    EXPECT_EQ(m.draw(0.0), 70.0);
    EXPECT_EQ(m.draw(1.0), 250.0);
    EXPECT_EQ(m.draw(0.5), 160.0);
    EXPECT_THROW(m.draw(1.01), ContractViolation);
    EXPECT_THROW(m.draw(-0.1), ContractViolation);
    EXPECT_THROW(PowerModel(300.0, 250.0), ContractViolation);
}

TEST(Mad, ConstantSeriesGivesFullThreshold) {
    EXPECT_EQ(*mad_threshold(history_of(std::vector<double>(10, 0.5)), 2.5), 1.0);
}

TEST(Mad, RampThreshold) {
    // Median 0.55; deviations 0.45,0.35,0.25,0.15,0.05 twice; their median 0.25.
    EXPECT_NEAR(oracle::mad(ramp()), 0.25, 1e-12);
    EXPECT_NEAR(*mad_threshold(history_of(ramp()), 2.5), 0.375, 1e-12);
}

TEST(Mad, AbstainsOnShortHistory) {
    EXPECT_FALSE(mad_threshold(history_of({0.9}), 2.5));
    EXPECT_TRUE(mad_threshold(history_of({0.9, 0.1}), 2.5));
}

TEST(Median, EvenLengthAveragesMiddle) {
    const std::vector<double> v{4.0, 1.0, 3.0, 2.0};
    EXPECT_EQ(median(v), 2.5);
    EXPECT_THROW(median(std::vector<double>{}), ContractViolation);
}

TEST(Lr, FlatSeriesPredictsItsLevel) {
    EXPECT_NEAR(*lr_predict(history_of(std::vector<double>(10, 0.4)), 10, 300.0), 0.4, 1e-12);
}

TEST(Lr, RampExtrapolatesOneEpoch) {
    // 0.1 per 300 s; the point after 1.0 is 1.1, and 1.2 * 1.1 overloads.
    const auto p = lr_predict(history_of(ramp()), 10, 300.0);
    ASSERT_TRUE(p);
    EXPECT_NEAR(*p, 1.1, 1e-12);
}

TEST(Lr, UsesOnlyTheWindow) {
    // Older samples are flat at 0.9; the last 4 fall by 0.1 each: 0.9..0.6.
    const auto p = lr_predict(history_of({0.9, 0.9, 0.9, 0.9, 0.9, 0.9, 0.8, 0.7, 0.6}), 4, 300.0);
    EXPECT_NEAR(*p, 0.5, 1e-12);
}

TEST(Lr, AbstainsOnShortHistory) {
    EXPECT_FALSE(lr_predict(history_of({0.1, 0.2}), 10, 300.0));
}

TEST(History, RingDropsOldestAndReplacesSameInstant) {
    UtilizationHistory h(10);
    for (int i = 0; i < 15; ++i) h.record(i, 0.01 * i);
    EXPECT_EQ(h.size(), 10u);
    EXPECT_EQ(h.samples().front().time, 5.0);
    h.record(14.0, 0.9);
    EXPECT_EQ(h.size(), 10u);
    EXPECT_EQ(h.latest()->utilization, 0.9);
    EXPECT_THROW(h.record(3.0, 0.1), ContractViolation);
}

TEST(Mmt, PicksSmallestRamOverBw) {
    const std::vector<VmDemand> vms{{0, 1, 1000, 512, 1000}, {1, 1, 1000, 256, 1000}, {2, 1, 1000, 256, 500}};
    EXPECT_EQ(select_vm_mmt(vms), 1);
    const std::vector<VmDemand> tied{{7, 1, 1000, 512, 1000}, {3, 1, 1000, 512, 1000}};
    EXPECT_EQ(select_vm_mmt(tied), 3);
    EXPECT_FALSE(select_vm_mmt(std::vector<VmDemand>{}));
}

TEST(Consolidation, CalmHostsStayPut) {
    HostPool pool({host(0, 4, {70, 250}), host(1, 4, {70, 250})});
    pool.place(0, {0, 1, 1000, 512, 1000});
    const std::vector<UtilizationHistory> hist{history_of(std::vector<double>(10, 0.25)),
                                               history_of(std::vector<double>(10, 0.0))};
    const auto r = consolidate_epoch(pool, hist, {{0, 1000.0}}, ConsolidationConfig{});
    EXPECT_TRUE(r.migrations.empty());
    EXPECT_TRUE(r.infeasible.empty());
}

TEST(Consolidation, OverloadedHostShedsToCheapestTarget) {
    // Host 0 runs at 0.6 against a 0.375 threshold. Moving VM 0 (0.25 of a
    // 4-PE host) costs 300 * 0.25 W on host 1 but 180 * 0.25 W on host 2.
    HostPool pool({host(0, 4, {70, 250}), host(1, 4, {100, 400}), host(2, 4, {70, 250})});
    pool.place(0, {0, 1, 1000, 512, 1000});
    pool.place(0, {1, 2, 1000, 512, 1000});
    const std::vector<UtilizationHistory> hist{history_of(ramp()), history_of(std::vector<double>(10, 0.0)),
                                               history_of(std::vector<double>(10, 0.0))};
    const auto r = consolidate_epoch(pool, hist, {{0, 1000.0}, {1, 1400.0}}, ConsolidationConfig{});
    ASSERT_EQ(r.migrations.size(), 1u);
    EXPECT_EQ(r.migrations[0], (Migration{0, 0, 2}));
    EXPECT_EQ(pool.host_of(0), 2);
    EXPECT_EQ(pool.host_of(1), 0);
}

TEST(Consolidation, NowhereToGoIsReportedNotForced) {
    HostPool pool({host(0, 2, {70, 250}), host(1, 2, {70, 250})});
    pool.place(0, {0, 1, 1000, 512, 1000});
    pool.place(1, {1, 1, 1000, 512, 1000});
    const std::vector<UtilizationHistory> hist{history_of(ramp()), history_of(ramp())};
    const auto r = consolidate_epoch(pool, hist, {{0, 1000.0}, {1, 1000.0}}, ConsolidationConfig{});
    EXPECT_TRUE(r.migrations.empty());
    EXPECT_EQ(r.infeasible.size(), 2u);
    EXPECT_EQ(pool.host_of(0), 0);
    EXPECT_EQ(pool.host_of(1), 1);
}

TEST(Consolidation, LrDetectorMigratesOnRisingTrend) {
    HostPool pool({host(0, 4, {70, 250}), host(1, 4, {70, 250})});
    pool.place(0, {0, 1, 1000, 512, 1000});
    const std::vector<UtilizationHistory> hist{history_of(ramp()), history_of(std::vector<double>(10, 0.1))};
    ConsolidationConfig cfg;
    cfg.detector = LrDetector{};
    const auto r = consolidate_epoch(pool, hist, {{0, 1000.0}}, cfg);
    ASSERT_EQ(r.migrations.size(), 1u);
    EXPECT_EQ(r.migrations[0], (Migration{0, 0, 1}));
}

TEST(ConsolidationConfig, RejectsBadParameters) {
    ConsolidationConfig c;
    c.detector = MadDetector{0.0};
    EXPECT_THROW(c.validate(), ContractViolation);
    c.detector = LrDetector{0.9, 10};
    EXPECT_THROW(c.validate(), ContractViolation);
    c.detector = LrDetector{1.2, 10};
    c.epoch = 0.0;
    EXPECT_THROW(c.validate(), ContractViolation);
}

TEST(Energy, PiecewiseIntegral) {
    const PowerModel m(70.0, 250.0);
    const std::vector<UtilizationSample> idle{{0.0, 0.0}};
    EXPECT_EQ(energy_joules(m, idle, 10.0), 700.0);
    const std::vector<UtilizationSample> steps{{0.0, 0.0}, {2.0, 1.0}};
    EXPECT_EQ(energy_joules(m, steps, 4.0), 640.0);
    EXPECT_EQ(energy_joules(m, {}, 4.0), 0.0);
}

TEST(PowerProperty, MadShiftAndScale) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> v(2 + rng() % 30);
        for (auto& x : v) x = u(rng);
        const double base = median_absolute_deviation(v);
        EXPECT_NEAR(base, oracle::mad(v), 1e-12);
        const double c = u(rng) - 0.5;
        const double k = 0.1 + u(rng);
        std::vector<double> shifted = v, scaled = v;
        for (auto& x : shifted) x += c;
        for (auto& x : scaled) x *= k;
        EXPECT_NEAR(median_absolute_deviation(shifted), base, 1e-12);
        EXPECT_NEAR(median_absolute_deviation(scaled), k * base, 1e-12);
        std::shuffle(v.begin(), v.end(), rng);
        EXPECT_EQ(median_absolute_deviation(v), base);
    }
}

TEST(PowerProperty, MadThresholdNonincreasingInS) {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> v(2 + rng() % 9);
        for (auto& x : v) x = u(rng);
        const auto h = history_of(v);
        double prev = 2.0;
        for (double s = 0.5; s <= 4.0; s += 0.5) {
            const double t = *mad_threshold(h, s);
            EXPECT_LE(t, prev);
            prev = t;
        }
    }
}

TEST(PowerProperty, LrMatchesLeastSquaresOracle) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t window = 2 + rng() % 9;
        UtilizationHistory h(10);
        std::vector<std::pair<double, double>> pts;
        double t = 0.0;
        const double a = 0.2 + 0.6 * u(rng), b = (u(rng) - 0.5) / 1e4;
        const bool exact = trial % 2 == 0;
        for (std::size_t i = 0; i < 10; ++i) {
            t += 10.0 + 300.0 * u(rng);
            const double value = exact ? a + b * t : u(rng);
            h.record(t, value);
            if (i >= 10 - window) pts.emplace_back(t, value);
        }
        const double at = t + 300.0;
        const auto p = lr_predict(h, window, 300.0);
        ASSERT_TRUE(p);
        EXPECT_NEAR(*p, oracle::ols_at(pts, at), 1e-9);
        if (exact) EXPECT_NEAR(*p, a + b * at, 1e-9);
    }
}

TEST(PowerProperty, MmtIgnoresListOrder) {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<VmDemand> vms;
        const int n = 1 + static_cast<int>(rng() % 8);
        for (int i = 0; i < n; ++i) {
            vms.push_back({i, 1, 1000.0, static_cast<std::int64_t>(128 * (1 + rng() % 4)),
                           static_cast<std::int64_t>(500 * (1 + rng() % 3))});
        }
        const auto pick = select_vm_mmt(vms);
        std::shuffle(vms.begin(), vms.end(), rng);
        EXPECT_EQ(select_vm_mmt(vms), pick);
    }
}

TEST(PowerProperty, EnergyBoundedByIdleAndPeak) {
    std::mt19937_64 rng(25);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const PowerModel m(70.0, 250.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<UtilizationSample> traj;
        double t = 0.0;
        for (int i = 0; i < 1 + static_cast<int>(rng() % 20); ++i) {
            traj.push_back({t, u(rng)});
            t += 5.0 * u(rng);
        }
        const double end = t + 1.0;
        const double e = energy_joules(m, traj, end);
        EXPECT_GE(e, 70.0 * end - 1e-9);
        EXPECT_LE(e, 250.0 * end + 1e-9);
    }
}
