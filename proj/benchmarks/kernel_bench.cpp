#include <memory>
#include <random>

#include <benchmark/benchmark.h>

#include "nimbus/entities/information_service.hpp"
#include "nimbus/kernel/simulation.hpp"
#include "nimbus/sched/cloudlet_scheduler.hpp"

using namespace nimbus;

namespace {

// Keeps a fixed number of self-events in flight until the budget runs out.
class Bouncer : public Entity {
public:
    Bouncer(std::int64_t budget, std::uint64_t seed) : Entity("bouncer"), budget_(budget), rng_(seed) {}

    void process(const Event&) override {
        if (--budget_ <= 0) return;
        sim().schedule(static_cast<double>(rng_() % 1000) / 100.0, id(), id(), Tag::User);
    }

private:
    std::int64_t budget_;
    std::mt19937_64 rng_;
};

}  // namespace

static void BM_EventThroughput(benchmark::State& state) {
    const auto in_flight = state.range(0);
    constexpr std::int64_t kEvents = 200000;
    for (auto _ : state) {
        Simulation sim;
        sim.init(std::make_unique<CloudInformationService>());
        auto& b = sim.create<Bouncer>(kEvents, 42);
        for (std::int64_t i = 0; i < in_flight; ++i) sim.schedule(0.0, b.id(), b.id(), Tag::User);
        benchmark::DoNotOptimize(sim.run());
    }
    state.SetItemsProcessed(state.iterations() * kEvents);
}
BENCHMARK(BM_EventThroughput)->Arg(1)->Arg(64)->Arg(4096)->Unit(benchmark::kMillisecond);

static void BM_TimeSharedBatch(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CloudletScheduler s(SchedulingPolicy::TimeShared, 1000.0, 1);
        for (int i = 0; i < n; ++i) s.submit(Cloudlet(i, 1000.0 + i, 300), 0.0);
        while (auto t = s.next_completion()) benchmark::DoNotOptimize(s.update(*t));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_TimeSharedBatch)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

BENCHMARK_MAIN();
