#include <benchmark/benchmark.h>

#include "circflow/constructions.hpp"
#include "circflow/valuations.hpp"

using namespace circflow;

namespace {

std::vector<Rational> p5_weights() {
  const PetersenData& d = petersen_data();
  std::vector<Rational> w(10);
  for (int v = 0; v < 10; ++v) w[v] = d.a.contains(v) ? Rational(11, 3) : Rational(-11, 3);
  return w;
}

void BM_BalanceBruteP5(benchmark::State& state) {
  const Multigraph p5 = petersen_family(2);
  const auto w = p5_weights();
  for (auto _ : state) {
    auto res = is_balanced_brute(p5, w);
    benchmark::DoNotOptimize(res.balanced);
  }
}
BENCHMARK(BM_BalanceBruteP5);

void BM_BalanceMincutP5(benchmark::State& state) {
  const Multigraph p5 = petersen_family(2);
  const auto w = p5_weights();
  for (auto _ : state) {
    auto res = is_balanced_mincut(p5, w);
    benchmark::DoNotOptimize(res.balanced);
  }
}
BENCHMARK(BM_BalanceMincutP5);

void BM_RefuteP5At19over7(benchmark::State& state) {
  const Multigraph p5 = petersen_family(2);
  for (auto _ : state) {
    auto res = refute_flow_by_valuation(p5, Rational(19, 7));
    benchmark::DoNotOptimize(res.verdict);
  }
}
BENCHMARK(BM_RefuteP5At19over7);

}  // namespace
