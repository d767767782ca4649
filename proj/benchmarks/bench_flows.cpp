#include <benchmark/benchmark.h>

#include "circflow/constructions.hpp"
#include "circflow/flows.hpp"

using namespace circflow;

namespace {

const Multigraph& petersen_graph() {
  static const Multigraph g = petersen();
  return g;
}

void BM_FlowDecisionPetersenYes(benchmark::State& state) {
  const Multigraph& p = petersen_graph();
  for (auto _ : state) {
    auto d = has_nwz_flow(p, Rational(5));
    benchmark::DoNotOptimize(d.verdict);
  }
}
BENCHMARK(BM_FlowDecisionPetersenYes);

void BM_FlowRefusalPetersenAt4(benchmark::State& state) {
  const Multigraph& p = petersen_graph();
  for (auto _ : state) {
    auto d = has_nwz_flow(p, Rational(4));
    benchmark::DoNotOptimize(d.verdict);
  }
}
BENCHMARK(BM_FlowRefusalPetersenAt4);

void BM_FlowRefusalP5At19over7(benchmark::State& state) {
  const Multigraph p5 = petersen_family(2);
  for (auto _ : state) {
    auto d = has_nwz_flow(p5, Rational(19, 7));
    benchmark::DoNotOptimize(d.verdict);
  }
}
BENCHMARK(BM_FlowRefusalP5At19over7)->Unit(benchmark::kMillisecond);

void BM_CircularFlowNumberK6(benchmark::State& state) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) edges.emplace_back(i, j);
  const Multigraph k6(6, edges);
  for (auto _ : state) {
    auto fc = circular_flow_number(k6);
    benchmark::DoNotOptimize(fc.value);
  }
}
BENCHMARK(BM_CircularFlowNumberK6)->Unit(benchmark::kMillisecond);

}  // namespace
