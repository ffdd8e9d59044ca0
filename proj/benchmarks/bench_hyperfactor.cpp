#include <benchmark/benchmark.h>

#include "hyperfactor/cartesian_pfd.hpp"
#include "hyperfactor/generator.hpp"
#include "hyperfactor/products.hpp"
#include "hyperfactor/skeleton.hpp"
#include "hyperfactor/strong_pfd.hpp"

namespace hf = hyperfactor;

namespace {

hf::Hypergraph cycle(std::size_t m) {
  std::vector<hf::Hyperedge> edges;
  for (hf::VertexId v = 0; v < m; ++v) edges.push_back({v, static_cast<hf::VertexId>((v + 1) % m)});
  return hf::Hypergraph(m, edges);
}

// Thin connected rank-3 factor with bounded degree; fixed seed.
const hf::Hypergraph& base_factor() {
  static const hf::Hypergraph h = [] {
    hf::GeneratorSpec spec;
    spec.n = 5;
    spec.rank_max = 3;
    spec.degree_max = 3;
    spec.seed = 90'000;
    spec.require_thin = true;
    spec.require_connected = true;
    return hf::generate(spec).hypergraph;
  }();
  return h;
}

hf::Hypergraph instance(benchmark::State& state, hf::ProductKind kind) {
  return hf::product(base_factor(), cycle(static_cast<std::size_t>(state.range(0))), kind).hypergraph;
}

void BM_StrongProduct(benchmark::State& state) {
  const auto c = cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hf::product(base_factor(), c, hf::ProductKind::Strong));
}
BENCHMARK(BM_StrongProduct)->RangeMultiplier(2)->Range(4, 32);

void BM_Skeleton(benchmark::State& state) {
  const auto h = instance(state, hf::ProductKind::Strong);
  for (auto _ : state) benchmark::DoNotOptimize(hf::cartesian_skeleton(h));
  state.counters["vertices"] = static_cast<double>(h.vertex_count());
}
BENCHMARK(BM_Skeleton)->RangeMultiplier(2)->Range(4, 32);

void BM_CartesianPfd(benchmark::State& state) {
  const auto h = instance(state, hf::ProductKind::Cartesian);
  for (auto _ : state) benchmark::DoNotOptimize(hf::hypergraph_cartesian_pfd(h));
  state.counters["vertices"] = static_cast<double>(h.vertex_count());
}
BENCHMARK(BM_CartesianPfd)->RangeMultiplier(2)->Range(4, 32);

void BM_StrongPfd(benchmark::State& state) {
  const auto h = instance(state, hf::ProductKind::Strong);
  for (auto _ : state) benchmark::DoNotOptimize(hf::pfd(h, hf::ProductKind::Strong));
  state.counters["vertices"] = static_cast<double>(h.vertex_count());
}
BENCHMARK(BM_StrongPfd)->RangeMultiplier(2)->Range(4, 32);

void BM_NormalPfd(benchmark::State& state) {
  const auto h = instance(state, hf::ProductKind::Normal);
  for (auto _ : state) benchmark::DoNotOptimize(hf::pfd(h, hf::ProductKind::Normal));
  state.counters["vertices"] = static_cast<double>(h.vertex_count());
}
BENCHMARK(BM_NormalPfd)->RangeMultiplier(2)->Range(4, 32);

}  // namespace

BENCHMARK_MAIN();
