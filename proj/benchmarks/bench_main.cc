#include <benchmark/benchmark.h>

#include "belyi/cohomology.hpp"
#include "belyi/constructions.hpp"
#include "belyi/descent.hpp"
#include "belyi/gaschuetz.hpp"
#include "belyi/relmod.hpp"

using namespace belyi;

static void BM_CharacterTable(benchmark::State& state) {
  PermGroup g = state.range(0) == 0 ? alternating_group(5) : symmetric_group(5);
  for (auto _ : state) benchmark::DoNotOptimize(character_table(g));
}
BENCHMARK(BM_CharacterTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_DescentA5Regular(benchmark::State& state) {
  PermGroup a5 = alternating_group(5);
  Permutation x = Permutation::from_cycles(5, {{1, 2, 3}});
  Permutation y = Permutation::from_cycles(5, {{1, 2, 3, 4, 5}});
  BelyiCover c = BelyiCover::galois(x, y);
  for (auto _ : state) benchmark::DoNotOptimize(descent_report(c));
}
BENCHMARK(BM_DescentA5Regular)->Unit(benchmark::kMillisecond);

static void BM_H2TrivialV4(benchmark::State& state) {
  CayleyGroup v4 = direct_product(cyclic_group(2), cyclic_group(2));
  FiniteHModule m = FiniteHModule::trivial(v4, std::vector<long long>(state.range(0), 2));
  for (auto _ : state) benchmark::DoNotOptimize(SecondCohomology(m).order());
}
BENCHMARK(BM_H2TrivialV4)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

static void BM_SchreierData(benchmark::State& state) {
  CayleyGroup a5 = CayleyGroup::from_perm_group(alternating_group(5));
  std::vector<int> images = a5.generator_indices();
  while (static_cast<int>(images.size()) < state.range(0)) images.push_back(0);
  for (auto _ : state) benchmark::DoNotOptimize(schreier_data(a5, images).rank());
}
BENCHMARK(BM_SchreierData)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_LiftGenerators(benchmark::State& state) {
  CayleyGroup s4 = CayleyGroup::from_perm_group(symmetric_group(4));
  std::vector<int> normal;
  for (const auto& ns : normal_subgroups(s4))
    if (ns.size() == 4) normal = ns;
  Quotient q = quotient(s4, normal);
  std::vector<int> s2 = *generating_tuple(q.group, 2);
  SurjectionProblem p = SurjectionProblem::from_map(s4, q.group, q.proj, s2);
  for (auto _ : state) benchmark::DoNotOptimize(lift_generators(p));
}
BENCHMARK(BM_LiftGenerators)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
