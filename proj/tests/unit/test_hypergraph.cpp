#include <doctest.h>

#include "corpus.hpp"
#include "hyperfactor/errors.hpp"
#include "hyperfactor/hypergraph.hpp"
#include "hyperfactor/oracle.hpp"
#include "hyperfactor/products.hpp"

using namespace hyperfactor;
using testing::hg;

TEST_SUITE("hypergraph") {
  TEST_CASE("construction canonicalizes and rejects malformed input") {
    const Hypergraph h(4, {{3, 1}, {0, 2, 1}, {1, 3}});
    REQUIRE(h.edge_count() == 2);
    CHECK(h.edge(0) == Hyperedge{0, 1, 2});
    CHECK(h.edge(1) == Hyperedge{1, 3});
    CHECK(h.rank() == 3);
    CHECK(h.degree(1) == 2);
    CHECK(h.max_degree() == 2);
    CHECK(h.contains_edge(Hyperedge{1, 3}));
    CHECK_FALSE(h.contains_edge(Hyperedge{0, 3}));

    CHECK_THROWS_AS(Hypergraph(0), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, {{}}), std::invalid_argument);
    CHECK(Hypergraph().vertex_count() == 1);
    CHECK(Hypergraph().edge_count() == 0);
  }

  TEST_CASE("validate") {
    SUBCASE("single 3-edge is simple and connected but not thin") {
      const auto r = validate(hg(3, {{0, 1, 2}}));
      CHECK(r.simple);
      CHECK(r.connected);
      CHECK_FALSE(r.thin);
      REQUIRE(r.twin_pair);
      CHECK(*r.twin_pair == VertexPair{0, 1});
    }
    SUBCASE("contained edge") {
      const auto r = validate(hg(3, {{0, 1}, {0, 1, 2}}));
      CHECK_FALSE(r.simple);
      REQUIRE(r.contained_edges);
      CHECK(r.contained_edges->first == Hyperedge{0, 1});
      CHECK(r.contained_edges->second == Hyperedge{0, 1, 2});
    }
    SUBCASE("thin rank-3 example") {
      const auto r = validate(testing::t3_prime());
      CHECK(r.simple);
      CHECK(r.connected);
      CHECK(r.thin);
    }
    SUBCASE("singleton edges are representable but not simple") {
      const auto r = validate(hg(2, {{0}, {0, 1}}));
      CHECK_FALSE(r.simple);
    }
    SUBCASE("K1 is simple by convention") {
      const auto r = validate(Hypergraph());
      CHECK(r.simple);
      CHECK(r.connected);
      CHECK(r.thin);
    }
    SUBCASE("disconnected witness") {
      const auto r = validate(hg(4, {{0, 1}, {2, 3}}));
      CHECK_FALSE(r.connected);
      REQUIRE(r.disconnected_pair);
    }
  }

  TEST_CASE("closed_neighborhood") {
    CHECK(closed_neighborhood(hg(3, {{0, 1, 2}}), 0) == VertexSet{0, 1, 2});
    CHECK(closed_neighborhood(hg(3, {{0, 1}, {1, 2}}), 0) == VertexSet{0, 1});
    CHECK(closed_neighborhood(testing::t3_prime(), 1) == VertexSet{0, 1, 2, 3});
    CHECK_THROWS_AS(closed_neighborhood(hg(3, {{0, 1}}), 3), std::out_of_range);
  }

  TEST_CASE("is_thin") {
    CHECK(is_thin(testing::path(3)).thin);
    const auto t3 = is_thin(testing::single_edge(3));
    CHECK_FALSE(t3.thin);
    REQUIRE(t3.witness);
    CHECK(*t3.witness == VertexPair{0, 1});
    CHECK(is_thin(Hypergraph()).thin);
    CHECK(twin_classes(testing::single_edge(3)) == std::vector<VertexSet>{{0, 1, 2}});
  }

  TEST_CASE("two_section") {
    CHECK(two_section(testing::single_edge(3)) == Graph::from_hypergraph(testing::complete_graph(3)));
    const auto g = two_section(hg(4, {{0, 1, 2}, {2, 3}}));
    CHECK(g.edge_list() == std::vector<VertexPair>{{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    CHECK(two_section(Hypergraph()).edge_count() == 0);
    CHECK(two_section(Hypergraph()).vertex_count() == 1);
  }

  TEST_CASE("distance and connectivity") {
    const auto h = hg(4, {{0, 1, 2}, {2, 3}});
    CHECK(distance(h, 0, 3) == std::optional<std::size_t>(2));
    CHECK(oracle::brute_distance(h, 0, 3) == std::optional<std::size_t>(2));
    CHECK(distance(h, 1, 1) == std::optional<std::size_t>(0));
    const auto split = hg(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(distance(split, 0, 3).has_value());
    CHECK_FALSE(is_connected(split));
    CHECK(connected_components(split) == std::vector<VertexSet>{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(distance(h, 0, 4), std::out_of_range);
  }

  TEST_CASE("induced and spanning partial hypergraphs") {
    const auto h = testing::t3_prime();
    const std::vector<VertexId> keep{1, 2, 3};
    const auto sub = induced(h, keep);
    CHECK(sub.hypergraph == hg(3, {{0, 2}}));
    CHECK(sub.to_parent == keep);
    const auto partial = spanning_partial(h, {true, false, true});
    CHECK(partial == hg(5, {{0, 1, 2}, {2, 4}}));
  }

  TEST_CASE("neighborhoods, thinness and distances agree with the 2-section") {
    testing::CorpusSpec spec;
    spec.count = 60;
    spec.n_max = 8;
    spec.rank_max = 4;
    spec.connected = false;
    for (const auto& h : testing::random_hypergraphs(spec)) {
      const Graph g = two_section(h);
      for (VertexId v = 0; v < h.vertex_count(); ++v) CHECK(closed_neighborhood(h, v) == closed_neighborhood(g, v));
      CHECK(is_thin(h).thin == is_thin(g).thin);
      for (VertexId u = 0; u < h.vertex_count(); ++u)
        for (VertexId v = 0; v < h.vertex_count(); ++v) CHECK(distance(h, u, v) == oracle::brute_distance(h, u, v));
      if (validate(h).simple) {
        for (const auto& e : h.edges())
          for (VertexId a : e)
            for (VertexId b : e)
              if (a != b) CHECK(g.adjacent(a, b));
      }
    }
  }

  TEST_CASE("distances in products agree with the path oracle") {
    testing::CorpusSpec spec;
    spec.count = 8;
    spec.n_max = 4;
    spec.rank_max = 3;
    for (const auto& [a, b] : testing::random_pairs(spec)) {
      if (a.vertex_count() * b.vertex_count() > 8) continue;
      for (auto kind : {ProductKind::Cartesian, ProductKind::Normal, ProductKind::Strong}) {
        const auto h = product(a, b, kind).hypergraph;
        for (VertexId u = 0; u < h.vertex_count(); ++u)
          for (VertexId v = 0; v < h.vertex_count(); ++v) CHECK(distance(h, u, v) == oracle::brute_distance(h, u, v));
      }
    }
  }
}
