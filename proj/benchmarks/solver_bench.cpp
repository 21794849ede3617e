#include <benchmark/benchmark.h>

#include "dimapf/solver.hpp"

using namespace dimapf;

namespace {

void bm_solve(benchmark::State &state, const std::string &family) {
    int n = static_cast<int>(state.range(0));
    Instance inst = bench_instance(family, n, 0);
    std::size_t len = 0;
    for (auto _ : state) {
        PlanResult res = solve(inst);
        len = res.plan.size();
        benchmark::DoNotOptimize(res);
    }
    state.counters["plan_len"] = static_cast<double>(len);
}

void bm_decide(benchmark::State &state, const std::string &family) {
    int n = static_cast<int>(state.range(0));
    Instance inst = bench_instance(family, n, 0);
    for (auto _ : state) {
        Decision d = decide(inst);
        benchmark::DoNotOptimize(d);
    }
}

void register_all() {
    for (const std::string &family : bench_families()) {
        benchmark::RegisterBenchmark(("solve/" + family).c_str(),
                                     [family](benchmark::State &s) {
                                         bm_solve(s, family);
                                     })
            ->DenseRange(5, 11, 2)
            ->Unit(benchmark::kMillisecond);
        benchmark::RegisterBenchmark(("decide/" + family).c_str(),
                                     [family](benchmark::State &s) {
                                         bm_decide(s, family);
                                     })
            ->DenseRange(5, 11, 2)
            ->Unit(benchmark::kMillisecond);
    }
}

} // namespace

int main(int argc, char **argv) {
    register_all();
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv))
        return 1;
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
