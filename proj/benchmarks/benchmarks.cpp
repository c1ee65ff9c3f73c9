#include <benchmark/benchmark.h>

#include "sphere12/balance.hpp"
#include "sphere12/moves.hpp"
#include "sphere12/named.hpp"
#include "sphere12/permgroup.hpp"
#include "sphere12/tammes.hpp"
#include "sphere12/topology.hpp"

using namespace sphere12;

static void BM_AngularDistance(benchmark::State& state) {
  const UnitVector a = UnitVector::from_spherical(0.7, 1.1);
  const UnitVector b = UnitVector::from_spherical(1.9, 4.2);
  for (auto _ : state) benchmark::DoNotOptimize(angular_distance(a, b));
}
BENCHMARK(BM_AngularDistance);

static void BM_InjectivityRadius12(benchmark::State& state) {
  const Configuration dod = named_dod();
  for (auto _ : state) benchmark::DoNotOptimize(injectivity_radius(dod));
}
BENCHMARK(BM_InjectivityRadius12);

static void BM_IsBalancedFCC(benchmark::State& state) {
  const Configuration fcc = named_fcc();
  for (auto _ : state) benchmark::DoNotOptimize(is_balanced(fcc, kPi / 3).balanced);
}
BENCHMARK(BM_IsBalancedFCC);

static void BM_TammesRestart6(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve(6, 1, 7).theta);
}
BENCHMARK(BM_TammesRestart6);

static void BM_M6Verify(benchmark::State& state) {
  const DeformationPath path = m6_path(M6Variant::FCC, 1.0, 0.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_path(path, 256).min_separation);
}
BENCHMARK(BM_M6Verify);

static void BM_AlternatingGroupOrder(benchmark::State& state) {
  std::vector<Permutation> gens;
  for (int pole = 0; pole < 12; ++pole)
    gens.push_back(induced_permutation(m5_path(pole, +1, 1.0), named_dod()));
  for (auto _ : state) benchmark::DoNotOptimize(generated_group_order(gens));
}
BENCHMARK(BM_AlternatingGroupOrder);

static void BM_Poincare12(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(poincare_polynomial(12, true));
}
BENCHMARK(BM_Poincare12);

BENCHMARK_MAIN();
