#include <benchmark/benchmark.h>

#include "vira/vira.hpp"

using namespace vira;

namespace {

void BM_CocycleIdentity(benchmark::State& state) {
  const auto omega = virasoro_oracle();
  for (auto _ : state) benchmark::DoNotOptimize(check_cocycle_identity(omega, state.range(0)));
}
BENCHMARK(BM_CocycleIdentity)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ReduceCocycle(benchmark::State& state) {
  OneCochain beta(12);
  for (Index n = -6; n <= 6; ++n) beta.set(n, Scalar(n, 3));
  const auto omega = Scalar(5, 2) * virasoro_oracle() + coboundary(beta);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_cocycle(omega, 12));
}
BENCHMARK(BM_ReduceCocycle)->Unit(benchmark::kMillisecond);

void BM_SugawaraL(benchmark::State& state) {
  const Scalar alpha(1, 2);
  FockVector v(alpha);
  for (const auto& p : partitions_of(static_cast<int>(state.range(0)))) v += FockVector::basis(alpha, p);
  for (auto _ : state) benchmark::DoNotOptimize(sugawara_L(-2, v));
}
BENCHMARK(BM_SugawaraL)->DenseRange(4, 10, 3)->Unit(benchmark::kMicrosecond);

void BM_SugawaraCommutator(benchmark::State& state) {
  const auto level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_sugawara_commutator(4, level, Scalar(1, 2)));
}
BENCHMARK(BM_SugawaraCommutator)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_VermaAction(benchmark::State& state) {
  const Scalar c(1, 2), h(1, 16);
  VermaVector v(c, h);
  for (const auto& p : partitions_of(static_cast<int>(state.range(0)))) v += VermaVector::basis(c, h, p);
  for (auto _ : state) benchmark::DoNotOptimize(verma_L_action(3, v));
}
BENCHMARK(BM_VermaAction)->DenseRange(4, 10, 3)->Unit(benchmark::kMicrosecond);

void BM_Intertwining(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_intertwining(Scalar(1, 2), 3, 4));
}
BENCHMARK(BM_Intertwining)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
