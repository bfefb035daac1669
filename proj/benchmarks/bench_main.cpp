#include <benchmark/benchmark.h>

#include "sigmaperm/catalog.hpp"
#include "sigmaperm/harness.hpp"
#include "sigmaperm/lattice.hpp"
#include "sigmaperm/pi.hpp"
#include "sigmaperm/sigma.hpp"

using namespace sigmaperm;

namespace {

const char* const kGroups[] = {"S4", "SL(2,3)xC2", "A5", "S5", "D2xD2xD2"};

void BM_Closure(benchmark::State& state) {
  const GroupSpec spec = parse_group_spec(kGroups[state.range(0)]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_group(spec));
  }
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_Closure)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

void BM_Lattice(benchmark::State& state) {
  const GroupPtr group = build_group(kGroups[state.range(0)]);
  std::size_t count = 0;
  for (auto _ : state) {
    count = all_subgroups(group).size();
  }
  state.SetLabel(std::string(kGroups[state.range(0)]) + ", " + std::to_string(count) +
                 " subgroups");
}
BENCHMARK(BM_Lattice)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Projectors(benchmark::State& state) {
  const auto lattice = all_subgroups(build_group(kGroups[state.range(0)]));
  const PrimeSet pi{2, 5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gpi_projectors(lattice, pi));
  }
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_Projectors)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

void BM_LevelThreeTable(benchmark::State& state) {
  const auto lattice = all_subgroups(build_group(kGroups[state.range(0)]));
  const SigmaPartition sigma = SigmaPartition::singletons(group_primes(lattice.group()));
  for (auto _ : state) {
    const SigmaAnalysis analysis(lattice, sigma);
    benchmark::DoNotOptimize(analysis.verdicts(Level::Three));
  }
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_LevelThreeTable)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_ScanAllClaims(benchmark::State& state) {
  const auto catalog = build_catalog(static_cast<std::size_t>(state.range(0)));
  SuiteOptions options;
  options.claims = all_claims();
  options.record_timing = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_suite(catalog, static_cast<std::size_t>(state.range(0)), options));
  }
}
BENCHMARK(BM_ScanAllClaims)->Arg(24)->Arg(60)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
