#include <benchmark/benchmark.h>

#include <random>

#include "dooroute/simulator.hpp"

using namespace dooroute;

namespace {

Configuration random_config(const SpatialGraph& g, int length,
                            std::mt19937_64& rng) {
  std::uniform_int_distribution<int> vert(-1, g.vertex_count() - 2);
  VertexId cur = vert(rng);
  while (g.neighbors(cur).empty()) cur = vert(rng);
  Configuration c;
  c.seq.push_back(cur);
  for (int i = 1; i < length; ++i) {
    const auto& nbrs = g.neighbors(cur);
    std::uniform_int_distribution<size_t> pick(0, nbrs.size() - 1);
    cur = nbrs[pick(rng)];
    c.seq.push_back(cur);
  }
  return c;
}

struct Workload {
  SpatialGraph graph;
  std::vector<std::pair<Configuration, Configuration>> pairs;
};

Workload make_workload(int length) {
  Layout layout = bundled_board();
  ValidatedLayout validated = validate_layout(layout);
  std::vector<ConvexRegion> regions = decompose(validated);
  Workload w{build_graph(regions, validated), {}};
  std::mt19937_64 rng(7);
  for (int i = 0; i < 64; ++i) {
    w.pairs.push_back({random_config(w.graph, length, rng),
                       random_config(w.graph, length, rng)});
  }
  return w;
}

void bm_edit_distance(benchmark::State& state) {
  Workload w = make_workload(static_cast<int>(state.range(0)));
  size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = w.pairs[i++ % w.pairs.size()];
    benchmark::DoNotOptimize(edit_distance(a, b).distance);
  }
}
BENCHMARK(bm_edit_distance)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void bm_next_action(benchmark::State& state) {
  Workload w = make_workload(static_cast<int>(state.range(0)));
  size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = w.pairs[i++ % w.pairs.size()];
    PlanOutcome outcome = next_action(a, b, w.graph);
    benchmark::DoNotOptimize(outcome);
  }
}
BENCHMARK(bm_next_action)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void bm_encode(benchmark::State& state) {
  Layout layout = bundled_board();
  ValidatedLayout validated = validate_layout(layout);
  std::vector<ConvexRegion> regions = decompose(validated);
  SpatialGraph graph = build_graph(regions, validated);
  World world{validated, regions, graph, DooPolyline{}};
  DooPolyline doo = random_polyline(world, 0.3, 0.5, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(encode(doo, graph, regions, validated));
  }
}
BENCHMARK(bm_encode);

}  // namespace

BENCHMARK_MAIN();
