// Microbenchmarks for the hot paths: extension counting under both
// strategies, the pair profile, the split identity, gamma checks, and the
// sunflower search. Fixtures are seeded once so runs are comparable.

#include <benchmark/benchmark.h>

#include "sunflower/extension.hpp"
#include "sunflower/family.hpp"
#include "sunflower/gamma.hpp"
#include "sunflower/random_families.hpp"
#include "sunflower/split.hpp"
#include "sunflower/sunflower_find.hpp"

using namespace sunflower;

namespace {

void BM_ext_by_supersets(benchmark::State& state) {
  const SetFamily f = random_family(12, 3, 40, 1);
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ExtensionResult r = ext(f, l, ExtStrategy::BySupersets);
    benchmark::DoNotOptimize(r.count);
  }
}
BENCHMARK(BM_ext_by_supersets)->Arg(5)->Arg(6)->Arg(8);

void BM_ext_by_containment(benchmark::State& state) {
  const SetFamily f = random_family(12, 3, 40, 1);
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ExtensionResult r = ext(f, l, ExtStrategy::ByContainment);
    benchmark::DoNotOptimize(r.count);
  }
}
BENCHMARK(BM_ext_by_containment)->Arg(5)->Arg(6)->Arg(8);

void BM_intersection_profile(benchmark::State& state) {
  const SetFamily f =
      random_weighted_family(12, 3, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) {
    auto p = intersection_profile(f);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_intersection_profile)->Arg(20)->Arg(60);

void BM_split_identity(benchmark::State& state) {
  const SetFamily f = random_weighted_family(6, 3, 12, 3);
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state) {
    VerdictReport r = split1_identity_check(f, 2, j);
    benchmark::DoNotOptimize(r.holds);
  }
}
BENCHMARK(BM_split_identity)->Arg(0)->Arg(2)->Arg(3);

void BM_gamma_unit(benchmark::State& state) {
  const SetFamily f = random_family(8, 3, 40, 4);
  const BigRat b(2);
  for (auto _ : state) {
    VerdictReport r = gamma_unit_check(f, b);
    benchmark::DoNotOptimize(r.holds);
  }
}
BENCHMARK(BM_gamma_unit);

void BM_gamma_weighted(benchmark::State& state) {
  const SetFamily f = random_weighted_family(8, 3, 40, 5);
  const BigRat b(2);
  for (auto _ : state) {
    VerdictReport r = gamma_weighted_check(f, b);
    benchmark::DoNotOptimize(r.holds);
  }
}
BENCHMARK(BM_gamma_weighted);

void BM_phase2(benchmark::State& state) {
  const SetFamily f = random_family(10, 3, 30, 6);
  for (auto _ : state) {
    VerdictReport r = phase2_check(f);
    benchmark::DoNotOptimize(r.holds);
  }
}
BENCHMARK(BM_phase2);

void BM_sunflower_search(benchmark::State& state) {
  const SetFamily f = random_family(10, 3, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    SunflowerSearch r = find_sunflower(f, 3);
    benchmark::DoNotOptimize(r.status);
  }
}
BENCHMARK(BM_sunflower_search)->Arg(10)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
