#include <benchmark/benchmark.h>

#include <vector>

#include "sqz/cohen.hpp"
#include "sqz/exact.hpp"
#include "sqz/interference.hpp"
#include "sqz/special_fn.hpp"

namespace {

void bm_hermite_sequence(benchmark::State& state) {
  std::vector<double> out(state.range(0));
  for (auto _ : state) {
    sqz::hermite_functions(3.7, std::span<double>(out));
    benchmark::DoNotOptimize(out.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_hermite_sequence)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void bm_gauss_hermite_rule(benchmark::State& state) {
  for (auto _ : state) {
    auto rule = sqz::gauss_hermite_rule(static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(rule.nodes.data());
  }
}
BENCHMARK(bm_gauss_hermite_rule)->Arg(100)->Arg(445)->Arg(2045)->Unit(benchmark::kMillisecond);

void bm_exact_distribution(benchmark::State& state) {
  const auto m_max = static_cast<unsigned>(state.range(0));
  sqz::cached_gauss_hermite_rule(m_max + 5 + 40);
  for (auto _ : state) benchmark::DoNotOptimize(sqz::exact_distribution(5, 2.0, m_max));
}
BENCHMARK(bm_exact_distribution)->Arg(400)->Arg(2000)->Unit(benchmark::kMillisecond);

void bm_exact_recurrence(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sqz::exact_recurrence_distribution(5, 2.0, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(bm_exact_recurrence)->Arg(400)->Arg(2000)->Unit(benchmark::kMillisecond);

void bm_wkb_distribution(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sqz::wkb_distribution(5, 2.0, 400));
}
BENCHMARK(bm_wkb_distribution)->Unit(benchmark::kMicrosecond);

void bm_cohen_distribution(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sqz::cohen_distribution(5, 2.0, 400));
}
BENCHMARK(bm_cohen_distribution)->Unit(benchmark::kMicrosecond);

void bm_wigner_ring_distribution(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sqz::wigner_ring_distribution(5, 2.0, 400));
}
BENCHMARK(bm_wigner_ring_distribution)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
