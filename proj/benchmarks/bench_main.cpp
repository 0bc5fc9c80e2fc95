// Timing of the DP, the search driver and the exact oracle on planted instances.

#include <benchmark/benchmark.h>

#include "ordalloc/dp_engine.hpp"
#include "ordalloc/generator.hpp"
#include "ordalloc/oracle.hpp"
#include "ordalloc/rounding.hpp"
#include "ordalloc/solver.hpp"

namespace {

using namespace ordalloc;

// Planted instance at target 1 with three items per agent. DP cost grows
// steeply with n and k, so sizes stay small.
ConvexInstance planted(std::size_t agents, Mode mode = Mode::MaxMin) {
  return gen_planted(42, agents, 3 * agents, Value(1), mode).instance;
}

void BM_Forward(benchmark::State& state) {
  const int k = static_cast<int>(state.range(1));
  const auto inst = lexicographic_copy(*scale(planted(static_cast<std::size_t>(state.range(0))), Value(1)));
  const auto rounded = round_instance(inst, scheme(k, Direction::Up));
  for (auto _ : state) benchmark::DoNotOptimize(forward(rounded).success());
}
BENCHMARK(BM_Forward)->Args({4, 4})->Args({6, 4})->Args({8, 4})->Args({4, 8})->Args({6, 8})->Unit(benchmark::kMillisecond);

void BM_Decide(benchmark::State& state) {
  const auto inst = planted(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decide(inst, Value(1), 8));
}
BENCHMARK(BM_Decide)->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SolveMaxMin(benchmark::State& state) {
  const auto inst = planted(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve(inst, 8).objective);
}
BENCHMARK(BM_SolveMaxMin)->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SolveMinMax(benchmark::State& state) {
  const auto inst = planted(static_cast<std::size_t>(state.range(0)), Mode::MinMax);
  for (auto _ : state) benchmark::DoNotOptimize(solve(inst, 8).objective);
}
BENCHMARK(BM_SolveMinMax)->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const auto inst = planted(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(opt(inst).opt);
}
BENCHMARK(BM_Oracle)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
