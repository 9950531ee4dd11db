#include <benchmark/benchmark.h>

#include <memory>
#include <string>
#include <vector>

#include "weylrep/affine.hpp"
#include "weylrep/chevalley.hpp"
#include "weylrep/fixer.hpp"
#include "weylrep/tits.hpp"

using namespace weylrep;

namespace {

const char* const kLabels[] = {"B3", "F4", "E6", "E7"};

std::shared_ptr<const RootSystem> system_for(int which) {
  return std::make_shared<const RootSystem>(cartan_datum(kLabels[which]));
}

void BM_BuildRootSystem(benchmark::State& state) {
  const auto datum = cartan_datum(kLabels[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(RootSystem(datum).num_roots());
  state.SetLabel(kLabels[state.range(0)]);
}
BENCHMARK(BM_BuildRootSystem)->DenseRange(0, 3);

void BM_EnumerateGroup(benchmark::State& state) {
  const auto rs = system_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_group(rs, 100000)->size());
  state.SetLabel(kLabels[state.range(0)]);
}
BENCHMARK(BM_EnumerateGroup)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Cocycle(benchmark::State& state) {
  const auto rs = system_for(state.range(0));
  Rng rng(1);
  std::vector<WeylElement> pool;
  for (int k = 0; k < 64; ++k) pool.push_back(random_element(rs, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cocycle(pool[i % 64], pool[(i * 7 + 3) % 64]));
    ++i;
  }
  state.SetLabel(kLabels[state.range(0)]);
}
BENCHMARK(BM_Cocycle)->DenseRange(0, 3);

void BM_PredictedCocycle(benchmark::State& state) {
  const auto rs = system_for(state.range(0));
  Rng rng(1);
  std::vector<WeylElement> pool;
  for (int k = 0; k < 64; ++k) pool.push_back(random_element(rs, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(predicted_cocycle(pool[i % 64], pool[(i * 7 + 3) % 64]));
    ++i;
  }
  state.SetLabel(kLabels[state.range(0)]);
}
BENCHMARK(BM_PredictedCocycle)->DenseRange(0, 3);

void BM_ScalarTable(benchmark::State& state) {
  const auto rs = system_for(state.range(0));
  const auto constants = StructureConstants::extraspecial(rs);
  for (auto _ : state) benchmark::DoNotOptimize(ScalarTable(constants).c_generator(0, 0));
  state.SetLabel(kLabels[state.range(0)]);
}
BENCHMARK(BM_ScalarTable)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_CWord(benchmark::State& state) {
  const auto rs = system_for(state.range(0));
  const ScalarTable table(StructureConstants::extraspecial(rs));
  Rng rng(2);
  const WeylElement w = random_element(rs, rng);
  RootIndex a = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(c_word(table, w, a));
    a = static_cast<RootIndex>((a + 1) % rs->num_roots());
  }
  state.SetLabel(kLabels[state.range(0)]);
}
BENCHMARK(BM_CWord)->DenseRange(0, 3);

void BM_SigmaRS(benchmark::State& state) {
  const auto rs = std::make_shared<const RootSystem>(cartan_datum("E6"));
  const WeylElement w = omega_sigma(rs, 6);
  for (auto _ : state) benchmark::DoNotOptimize(sigma_rs(w).triples.size());
}
BENCHMARK(BM_SigmaRS);

void BM_FixerSolve(benchmark::State& state) {
  const auto rs = std::make_shared<const RootSystem>(cartan_datum("E6"));
  const ScalarTable table(StructureConstants::extraspecial(rs));
  const auto lat = coweight_lattice(*rs);
  const auto omega = omega_group(rs, lat);
  const auto units = UnitGroup::for_field(13);
  Rng rng(3);
  for (auto _ : state) {
    const auto sys = build_system(table, lat, omega[1], random_functional(rs->rank(), units, rng), units);
    benchmark::DoNotOptimize(solve(*rs, sys).has_value());
  }
}
BENCHMARK(BM_FixerSolve);

}  // namespace

BENCHMARK_MAIN();
