#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "wgshift/analyzer.hpp"
#include "wgshift/finite_lab.hpp"
#include "wgshift/gallery.hpp"
#include "wgshift/witness.hpp"

using namespace wgs;

namespace {

// Deterministic system with exactly the requested index count.
FiniteSystem bench_system(std::size_t indices) {
  FiniteSystem s;
  s.field = FieldSpec(2);
  for (std::size_t i = 0; i < indices; ++i) {
    s.map.push_back((i * 7 + 3) % indices);
    s.weights.push_back(FieldElement(s.field, i % 5 == 4 ? 0 : 1));
  }
  return s;
}

void BM_ApplyShift(benchmark::State& state) {
  FiniteSystem s = bench_system(static_cast<std::size_t>(state.range(0)));
  std::vector<FieldElement> x = decode_state(s, state_count(s) / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_shift(s, x));
  }
}
BENCHMARK(BM_ApplyShift)->Arg(8)->Arg(12)->Arg(16);

void BM_TransitionTable(benchmark::State& state) {
  FiniteSystem s = bench_system(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(transition_table(s));
  }
}
BENCHMARK(BM_TransitionTable)->Arg(8)->Arg(10)->Arg(12);

void BM_QuasiPeriodPair(benchmark::State& state) {
  FiniteSystem s = bench_system(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(quasi_period_pair(s));
  }
}
BENCHMARK(BM_QuasiPeriodPair)->Arg(8)->Arg(10);

void BM_SurjectiveCover(benchmark::State& state) {
  FiniteSystem s = bench_system(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(surjective_cover(s));
  }
}
BENCHMARK(BM_SurjectiveCover)->Arg(8)->Arg(10);

void BM_PredicateVector(benchmark::State& state) {
  const auto& entries = gallery();
  for (auto _ : state) {
    for (const GalleryEntry& e : entries)
      benchmark::DoNotOptimize(predicate_vector(e.presentation));
  }
}
BENCHMARK(BM_PredicateVector);

void BM_PredicateVectorRandom(benchmark::State& state) {
  std::vector<Presentation> ps;
  for (std::uint64_t seed = 1; seed <= 32; ++seed)
    ps.push_back(random_presentation(seed, static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state) {
    for (const Presentation& p : ps)
      benchmark::DoNotOptimize(predicate_vector(p));
  }
}
BENCHMARK(BM_PredicateVectorRandom)->Arg(3)->Arg(6);

void BM_TauWitnessSearch(benchmark::State& state) {
  const GalleryEntry* e = find_entry("theta1_u");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tau_witness_search(e->presentation, true,
                           static_cast<std::uint64_t>(state.range(0)), 200));
  }
}
BENCHMARK(BM_TauWitnessSearch)->Arg(20)->Arg(50);

void BM_FibreGapScan(benchmark::State& state) {
  const GalleryEntry* e = find_entry("badr5000");
  for (auto _ : state) {
    benchmark::DoNotOptimize(fibre_gap_scan(e->presentation, true, 1024,
                                            static_cast<std::uint64_t>(state.range(0))));
  }
}
BENCHMARK(BM_FibreGapScan)->Arg(50)->Arg(200);

} // namespace

BENCHMARK_MAIN();
