#include <benchmark/benchmark.h>

#include <random>

#include "reeb/oracle.hpp"
#include "reeb/persistence.hpp"
#include "reeb/smoothing.hpp"
#include "reeb/transport.hpp"

namespace {

using namespace reeb;

// A stack of `loops` loops between a global min and max; 2*loops + 2 vertices.
ReebGraph stacked_loops(int loops) {
  ReebGraph g;
  g.add_vertex("min", 0.0);
  for (int i = 0; i < loops; ++i) {
    g.add_vertex("u" + std::to_string(i), 2.0 * i + 1.0);
    g.add_vertex("d" + std::to_string(i), 2.0 * i + 2.0);
    g.add_edge("u" + std::to_string(i), "d" + std::to_string(i), 2);
    if (i > 0) g.add_edge("d" + std::to_string(i - 1), "u" + std::to_string(i));
  }
  g.add_vertex("max", 2.0 * loops + 1.0);
  g.add_edge("min", "u0");
  g.add_edge("d" + std::to_string(loops - 1), "max");
  return g;
}

ExtendedDiagram seeded_diagram(std::size_t points_per_kind) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> low(0.0, 10.0);
  std::uniform_real_distribution<double> life(0.1, 5.0);
  ExtendedDiagram d;
  for (PairKind kind : kAllKinds)
    for (std::size_t i = 0; i < points_per_kind; ++i) {
      double l = low(rng);
      d.add(kind, l, l + life(rng));
    }
  return d;
}

void BM_ExtendedDiagram(benchmark::State& state) {
  ReebGraph g = stacked_loops(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(extended_diagram(g));
}
BENCHMARK(BM_ExtendedDiagram)->Arg(4)->Arg(32)->Arg(128);

void BM_ExtendedDiagramOracle(benchmark::State& state) {
  ReebGraph g = stacked_loops(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(extended_diagram_oracle(g));
}
BENCHMARK(BM_ExtendedDiagramOracle)->Arg(4)->Arg(32);

void BM_Smooth(benchmark::State& state) {
  ReebGraph g = stacked_loops(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(smooth(g, 0.35));
}
BENCHMARK(BM_Smooth)->Arg(4)->Arg(32)->Arg(128);

void BM_TruncatedSmooth(benchmark::State& state) {
  ReebGraph g = stacked_loops(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(truncated_smooth(g, TransportParams{0.35, 0.5}));
}
BENCHMARK(BM_TruncatedSmooth)->Arg(4)->Arg(32);

void BM_Bottleneck(benchmark::State& state) {
  ExtendedDiagram a = seeded_diagram(static_cast<std::size_t>(state.range(0)));
  ExtendedDiagram b = seeded_diagram(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bottleneck(a, b));
}
BENCHMARK(BM_Bottleneck)->Arg(4)->Arg(16)->Arg(64);

void BM_Transport(benchmark::State& state) {
  ExtendedDiagram d = seeded_diagram(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(transport(d, TransportParams{0.5, 0.25}));
}
BENCHMARK(BM_Transport)->Arg(16)->Arg(256);

} // namespace

BENCHMARK_MAIN();
