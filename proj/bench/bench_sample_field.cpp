#include <benchmark/benchmark.h>

#include "latproj/planform.hpp"
#include "latproj/presets.hpp"

namespace {

using namespace latproj;

const ProjectedWaveSum& black_eye() {
  static const ProjectedWaveSum sum = [] {
    PointGroup h = holohedry(bcc_rotated_lattice());
    return project_sum(invariant_sum(h, parse_vector("1/2, 1/2*sqrt3, 0")), parse_scalar("1/4*sqrt6"));
  }();
  return sum;
}

void BM_SampleSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_field_serial(black_eye(), Window{}, n, n));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n * n));
}

void BM_SampleParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_field(black_eye(), Window{}, n, n));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n * n));
}

}  // namespace

BENCHMARK(BM_SampleSerial)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleParallel)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
