#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "corpus.hpp"
#include "hyperfactor/cartesian_pfd.hpp"
#include "hyperfactor/errors.hpp"
#include "hyperfactor/isomorphism.hpp"
#include "hyperfactor/oracle.hpp"
#include "hyperfactor/products.hpp"

using namespace hyperfactor;
using testing::hg;

namespace {

std::vector<Hypergraph> as_hypergraphs(const std::vector<Graph>& gs) {
  std::vector<Hypergraph> out;
  for (const auto& g : gs) out.push_back(g.to_hypergraph());
  return out;
}

void check_reconstruction(const Hypergraph& h, const HypergraphFactorization& f) {
  if (f.factors.empty()) {
    CHECK(h.vertex_count() == 1);
    return;
  }
  std::vector<std::size_t> all(f.coords.factor_count());
  std::iota(all.begin(), all.end(), std::size_t{0});
  VertexBijection map(h.vertex_count());
  for (VertexId v = 0; v < h.vertex_count(); ++v) map[v] = static_cast<VertexId>(f.coords.encode(v, all));
  CHECK(relabel(h, map) == product_all(f.factors, ProductKind::Cartesian).hypergraph);
}

}  // namespace

TEST_SUITE("cartesian_pfd") {
  TEST_CASE("graph examples") {
    const auto c4 = graph_cartesian_pfd(Graph::from_hypergraph(testing::cycle(4)));
    REQUIRE(c4.factors.size() == 2);
    CHECK(c4.factors[0] == Graph::from_hypergraph(testing::complete_graph(2)));
    CHECK(c4.factors[1] == Graph::from_hypergraph(testing::complete_graph(2)));

    const auto k3 = graph_cartesian_pfd(Graph::from_hypergraph(testing::complete_graph(3)));
    CHECK(k3.factors.size() == 1);

    const auto p3 = testing::path(3);
    const auto grid = product(p3, p3, ProductKind::Cartesian).hypergraph;
    const auto g = graph_cartesian_pfd(Graph::from_hypergraph(grid));
    REQUIRE(g.factors.size() == 2);
    CHECK(oracle::same_factors(as_hypergraphs(g.factors), oracle::brute_pfd(grid, ProductKind::Cartesian).factors));

    const auto k2 = testing::complete_graph(2);
    const std::vector<Hypergraph> three{k2, k2, k2};
    const auto cube = product_all(three, ProductKind::Cartesian).hypergraph;
    CHECK(graph_cartesian_pfd(Graph::from_hypergraph(cube)).factors.size() == 3);

    CHECK(graph_cartesian_pfd(Graph()).factors.empty());
    CHECK_THROWS_AS(graph_cartesian_pfd(Graph::from_hypergraph(hg(4, {{0, 1}, {2, 3}}))), NotConnected);
  }

  TEST_CASE("hypergraph examples") {
    const auto t = testing::t3_prime();
    const auto p3 = testing::path(3);
    const auto h = product(t, p3, ProductKind::Cartesian).hypergraph;
    const auto f = hypergraph_cartesian_pfd(h);
    CHECK(oracle::same_factors(f.factors, {t, p3}));
    check_reconstruction(h, f);

    CHECK(hypergraph_cartesian_pfd(Hypergraph()).factors.empty());
    const auto t3 = hypergraph_cartesian_pfd(testing::single_edge(3));
    REQUIRE(t3.factors.size() == 1);
    CHECK(t3.factors[0] == testing::single_edge(3));
    CHECK_THROWS_AS(hypergraph_cartesian_pfd(hg(4, {{0, 1}, {2, 3}})), NotConnected);
    CHECK_THROWS_AS(hypergraph_cartesian_pfd(hg(3, {{0, 1}, {0, 1, 2}})), NotSimple);
  }

  TEST_CASE("graph factors are grouped when the layers differ") {
    // 2-section K3 x K3, but only one row is a 3-edge; the others are triangles.
    std::vector<Hyperedge> edges{{0, 1, 2}, {3, 4}, {3, 5}, {4, 5}, {6, 7}, {6, 8}, {7, 8}};
    for (VertexId c = 0; c < 3; ++c) {
      edges.push_back({c, c + 3});
      edges.push_back({c, c + 6});
      edges.push_back({c + 3, c + 6});
    }
    const Hypergraph h(9, edges);
    const auto f = hypergraph_cartesian_pfd(h);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == h);
    CHECK(oracle::brute_pfd(h, ProductKind::Cartesian).factors.size() == 1);
    CHECK(graph_cartesian_pfd(two_section(h)).factors.size() == 2);
  }

  TEST_CASE("assign_coordinates") {
    const auto c4 = testing::cycle(4);
    const auto f = hypergraph_cartesian_pfd(c4);
    const auto coords = assign_coordinates(c4, f);
    std::set<std::vector<std::uint32_t>> tuples;
    for (const auto& t : coords.tuples()) tuples.insert(t);
    CHECK(tuples == std::set<std::vector<std::uint32_t>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

    const auto t = testing::t3_prime();
    const auto prime = assign_coordinates(t, hypergraph_cartesian_pfd(t));
    CHECK(prime == Coordinates({5}, {{0}, {1}, {2}, {3}, {4}}));

    const auto p3 = testing::path(3);
    const auto grid = product(p3, p3, ProductKind::Cartesian).hypergraph;
    const auto gc = assign_coordinates(grid, hypergraph_cartesian_pfd(grid));
    CHECK(gc.factor_count() == 2);
    CHECK(gc.dims()[0] == 3);
    CHECK(gc.dims()[1] == 3);

    HypergraphFactorization broken = f;
    broken.factors.pop_back();
    CHECK_THROWS_AS(assign_coordinates(c4, broken), std::invalid_argument);
  }

  TEST_CASE("random instances: reconstruction, bounds, idempotence, oracle") {
    testing::CorpusSpec spec;
    spec.count = 60;
    spec.n_max = 10;
    spec.rank_max = 3;
    for (const auto& h : testing::random_hypergraphs(spec)) {
      const auto f = hypergraph_cartesian_pfd(h);
      check_reconstruction(h, f);
      CHECK(static_cast<double>(f.factors.size()) <= std::log2(static_cast<double>(h.vertex_count())) + 1e-9);
      const auto labels = classify_edges(h, f.coords);
      for (std::size_t i = 0; i < labels.size(); ++i) CHECK(labels[i].color == f.edge_color[i]);
      for (const auto& factor : f.factors) CHECK(hypergraph_cartesian_pfd(factor).factors.size() == 1);
      CHECK(oracle::same_factors(f.factors, oracle::brute_pfd(h, ProductKind::Cartesian).factors));
    }
  }

  TEST_CASE("products of random factors split back into their prime factors") {
    testing::CorpusSpec spec;
    spec.count = 30;
    spec.n_max = 6;
    spec.seed = 77;
    for (const auto& [a, b] : testing::random_pairs(spec)) {
      const auto h = product(a, b, ProductKind::Cartesian).hypergraph;
      const auto f = hypergraph_cartesian_pfd(h);
      check_reconstruction(h, f);
      auto expected = hypergraph_cartesian_pfd(a).factors;
      const auto fb = hypergraph_cartesian_pfd(b).factors;
      expected.insert(expected.end(), fb.begin(), fb.end());
      CHECK(oracle::same_factors(f.factors, expected));
    }
  }
}
