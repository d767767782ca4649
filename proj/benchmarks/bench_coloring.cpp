#include <benchmark/benchmark.h>

#include "circflow/coloring.hpp"
#include "circflow/constructions.hpp"

using namespace circflow;

namespace {

void BM_ChromaticIndexPetersen(benchmark::State& state) {
  const Multigraph p = petersen();
  for (auto _ : state) {
    auto ci = chromatic_index(p);
    benchmark::DoNotOptimize(ci.upper);
  }
}
BENCHMARK(BM_ChromaticIndexPetersen);

void BM_ClassifyP5(benchmark::State& state) {
  const Multigraph p5 = petersen_family(2);
  for (auto _ : state) {
    auto res = classify(p5);
    benchmark::DoNotOptimize(res.value);
  }
}
BENCHMARK(BM_ClassifyP5)->Unit(benchmark::kMillisecond);

void BM_MatchingEnumerationPetersen(benchmark::State& state) {
  const Multigraph p = petersen();
  for (auto _ : state) {
    auto pms = all_perfect_matchings(p);
    benchmark::DoNotOptimize(pms.size());
  }
}
BENCHMARK(BM_MatchingEnumerationPetersen);

}  // namespace
