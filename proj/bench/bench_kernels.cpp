// Serial reference vs OpenMP kernels for the enumeration-heavy operations.

#include <benchmark/benchmark.h>

#include "qtsym/explore.hpp"
#include "qtsym/filling.hpp"
#include "qtsym/genfunc.hpp"

namespace {

using namespace qtsym;

std::size_t inv_stat(const Filling& f) { return inv_filling(f); }
std::size_t maj_stat(const Filling& f) { return maj_filling(f); }

void BM_MacdonaldSerial(benchmark::State& state) {
    const Partition mu{3, 2, 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(filling_generating_function_serial(mu, 3, &inv_stat, &maj_stat));
    }
}
BENCHMARK(BM_MacdonaldSerial)->Unit(benchmark::kMillisecond);

void BM_MacdonaldParallel(benchmark::State& state) {
    const Partition mu{3, 2, 2};
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            filling_generating_function_parallel(mu, 3, &inv_stat, &maj_stat, threads));
    }
}
BENCHMARK(BM_MacdonaldParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_BijectiveCheck(benchmark::State& state) {
    const Partition mu{3, 2, 1};
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_bijective_q1_symmetry(mu, 3, threads));
}
BENCHMARK(BM_BijectiveCheck)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_OrbitTableSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(basement_action_table_serial(8));
}
BENCHMARK(BM_OrbitTableSerial)->Unit(benchmark::kMillisecond);

void BM_OrbitTableParallel(benchmark::State& state) {
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(basement_action_table_parallel(8, threads));
}
BENCHMARK(BM_OrbitTableParallel)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
