#include <benchmark/benchmark.h>

#include "lierep/classification.hpp"
#include "lierep/lie_type.hpp"
#include "lierep/multiplicity.hpp"
#include "lierep/root_system.hpp"
#include "lierep/weight_lattice.hpp"

using namespace lierep;

namespace {

void BM_RootSystem(benchmark::State& state, const char* type) {
  const LieType t = LieType::parse(type);
  for (auto _ : state) benchmark::DoNotOptimize(RootSystem(t));
}
BENCHMARK_CAPTURE(BM_RootSystem, F4, "F4");
BENCHMARK_CAPTURE(BM_RootSystem, E8, "E8");

void BM_MultiplicityTable(benchmark::State& state, const char* type, Weight lam) {
  const RootSystem rs(LieType::parse(type));
  for (auto _ : state) benchmark::DoNotOptimize(multiplicity_table(rs, lam));
}
BENCHMARK_CAPTURE(BM_MultiplicityTable, A3_030, "A3", Weight{0, 3, 0});
BENCHMARK_CAPTURE(BM_MultiplicityTable, C5_00001, "C5", Weight{0, 0, 0, 0, 1});
BENCHMARK_CAPTURE(BM_MultiplicityTable, F4_1001, "F4", Weight{1, 0, 0, 1});
BENCHMARK_CAPTURE(BM_MultiplicityTable, E8_adjoint, "E8", Weight{0, 0, 0, 0, 0, 0, 0, 1});

void BM_Subdominant(benchmark::State& state) {
  const RootSystem rs(LieType::parse("B4"));
  const Weight lam{2, 0, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(subdominant_weights(rs, lam));
}
BENCHMARK(BM_Subdominant);

void BM_OmegaSearch(benchmark::State& state, const char* type, bool prune) {
  const RootSystem rs(LieType::parse(type));
  for (auto _ : state) benchmark::DoNotOptimize(omega_search(rs, 2, static_cast<int>(state.range(0)), prune));
}
BENCHMARK_CAPTURE(BM_OmegaSearch, C4_pruned, "C4", true)->Arg(3)->Arg(4);
BENCHMARK_CAPTURE(BM_OmegaSearch, C4_unpruned, "C4", false)->Arg(3)->Arg(4);
BENCHMARK_CAPTURE(BM_OmegaSearch, A5_pruned, "A5", true)->Arg(4);

void BM_VerifyTable1(benchmark::State& state) {
  const auto config = default_config(4);
  for (auto _ : state) benchmark::DoNotOptimize(verify_table1(config));
}
BENCHMARK(BM_VerifyTable1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
