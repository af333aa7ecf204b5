#include "lorcal/emfield.hpp"
#include "lorcal/identities.hpp"
#include "lorcal/verify.hpp"

#include <benchmark/benchmark.h>

namespace {

using lorcal::Exec;

void BM_IdentitySuite(benchmark::State& state, Exec exec) {
  for (auto _ : state) {
    auto entries = lorcal::run_identity_suite(state.range(0), 42, exec);
    benchmark::DoNotOptimize(entries);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_LibraryChecks(benchmark::State& state, Exec exec) {
  for (auto _ : state) {
    auto entries = lorcal::run_library_checks(state.range(0), 42, exec);
    benchmark::DoNotOptimize(entries);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ConeSweep(benchmark::State& state, Exec exec) {
  const auto dirs = lorcal::sphere_directions(static_cast<int>(state.range(0)));
  const std::vector<double> radii{0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0};
  for (auto _ : state) {
    auto rows = lorcal::sample_cone(1.0, lorcal::Vec3(0.3, -1.2, 0.5), radii, dirs, exec);
    benchmark::DoNotOptimize(rows);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * static_cast<int64_t>(radii.size()));
}

}  // namespace

BENCHMARK_CAPTURE(BM_IdentitySuite, serial, Exec::Serial)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_IdentitySuite, parallel, Exec::Parallel)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LibraryChecks, serial, Exec::Serial)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LibraryChecks, parallel, Exec::Parallel)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ConeSweep, serial, Exec::Serial)->Arg(256)->Arg(4096)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_ConeSweep, parallel, Exec::Parallel)->Arg(256)->Arg(4096)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
