#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "hyperfactor/counting.hpp"
#include "hyperfactor/errors.hpp"
#include "hyperfactor/isomorphism.hpp"
#include "hyperfactor/oracle.hpp"
#include "hyperfactor/products.hpp"

using namespace hyperfactor;
using testing::hg;

namespace {

const ProductKind kAllKinds[] = {ProductKind::Cartesian, ProductKind::Normal, ProductKind::Strong};

/// (x1, x2) -> (x2, x1) between H1*H2 and H2*H1.
VertexBijection swap_map(std::size_t n1, std::size_t n2) {
  VertexBijection b(n1 * n2);
  for (VertexId x1 = 0; x1 < n1; ++x1)
    for (VertexId x2 = 0; x2 < n2; ++x2) b[x1 * n2 + x2] = static_cast<VertexId>(x2 * n1 + x1);
  return b;
}

}  // namespace

TEST_SUITE("products") {
  TEST_CASE("K2 x K2") {
    const auto k2 = testing::complete_graph(2);
    const auto c4 = product(k2, k2, ProductKind::Cartesian);
    CHECK(c4.hypergraph == hg(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}}));
    CHECK(c4.hypergraph == oracle::brute_product(k2, k2, ProductKind::Cartesian));
    CHECK(c4.coords == Coordinates::row_major({2, 2}));
    CHECK(product(k2, k2, ProductKind::Strong).hypergraph == testing::complete_graph(4));
    CHECK(product(k2, k2, ProductKind::Normal).hypergraph == testing::complete_graph(4));
  }

  TEST_CASE("T3 normal K2") {
    const auto h = product(testing::single_edge(3), testing::complete_graph(2), ProductKind::Normal).hypergraph;
    REQUIRE(h.vertex_count() == 6);
    // vertex (a, b) has id 2a + b
    std::vector<Hyperedge> expected{{0, 2, 4}, {1, 3, 5}, {0, 1}, {2, 3}, {4, 5}};
    for (VertexId a = 0; a < 3; ++a)
      for (VertexId b = 0; b < 3; ++b)
        if (a != b) expected.push_back({std::min(2 * a, 2 * b + 1), std::max(2 * a, 2 * b + 1)});
    CHECK(h == Hypergraph(6, expected));
    CHECK(h.edge_count() == 11);
    CHECK(h == oracle::brute_product(testing::single_edge(3), testing::complete_graph(2), ProductKind::Normal));
  }

  TEST_CASE("K1 is the unit") {
    for (auto kind : kAllKinds) {
      const auto h = testing::t3_prime();
      const auto right = product(h, Hypergraph(), kind);
      CHECK(right.hypergraph == h);
      CHECK(product(Hypergraph(), h, kind).hypergraph == h);
      CHECK(right.coords.dims()[1] == 1);
    }
    CHECK(product_all(std::vector<Hypergraph>{}, ProductKind::Strong).hypergraph == Hypergraph());
  }

  TEST_CASE("preconditions and caps") {
    CHECK_THROWS_AS(product(hg(3, {{0, 1}, {0, 1, 2}}), testing::path(2), ProductKind::Strong), NotSimple);
    Limits small;
    small.product_max_vertices = 8;
    CHECK_THROWS_AS(product(testing::path(3), testing::path(3), ProductKind::Strong, small), CapExceeded);
    small = Limits{};
    small.product_max_edges = 10;
    CHECK_THROWS_AS(product(testing::path(3), testing::path(3), ProductKind::Strong, small), CapExceeded);
  }

  TEST_CASE("classify_edges") {
    const auto k2 = testing::complete_graph(2);
    const auto c4 = product(k2, k2, ProductKind::Cartesian);
    const auto labels = classify_edges(c4.hypergraph, c4.coords);
    CHECK(std::count_if(labels.begin(), labels.end(), [](const EdgeLabel& l) { return l.color == 0u; }) == 2);
    CHECK(std::count_if(labels.begin(), labels.end(), [](const EdgeLabel& l) { return l.color == 1u; }) == 2);

    const auto k4 = product(k2, k2, ProductKind::Strong);
    const auto k4_labels = classify_edges(k4.hypergraph, k4.coords);
    CHECK(std::count_if(k4_labels.begin(), k4_labels.end(), [](const EdgeLabel& l) { return l.cartesian(); }) == 4);

    const auto h = testing::t3_prime();
    const Coordinates single({5}, {{0}, {1}, {2}, {3}, {4}});
    for (const auto& l : classify_edges(h, single)) CHECK(l.color == 0u);
  }

  TEST_CASE("layer") {
    const auto k2 = testing::complete_graph(2);
    const auto c4 = product(k2, k2, ProductKind::Cartesian);
    CHECK(layer(c4.hypergraph, c4.coords, 0, 1).hypergraph == k2);
    const auto t = product(testing::single_edge(3), k2, ProductKind::Normal);
    const auto l = layer(t.hypergraph, t.coords, 0, 0);
    CHECK(l.hypergraph == testing::single_edge(3));
    CHECK(l.to_parent == std::vector<VertexId>{0, 2, 4});
    const auto with_k1 = product(k2, Hypergraph(), ProductKind::Strong);
    CHECK(layer(with_k1.hypergraph, with_k1.coords, 1, 0).hypergraph == Hypergraph());
    CHECK_THROWS_AS(layer(c4.hypergraph, c4.coords, 2, 0), std::out_of_range);
  }

  TEST_CASE("fast construction matches the definition scan") {
    testing::CorpusSpec spec;
    spec.count = 60;
    spec.n_min = 1;
    spec.n_max = 5;
    spec.rank_max = 4;
    spec.connected = false;
    for (const auto& [a, b] : testing::random_pairs(spec)) {
      for (auto kind : kAllKinds) {
        CAPTURE(to_string(kind));
        CHECK(product(a, b, kind).hypergraph == oracle::brute_product(a, b, kind));
      }
    }
  }

  TEST_CASE("algebraic laws, simplicity, connectivity, 2-section and thinness") {
    testing::CorpusSpec spec;
    spec.count = 40;
    spec.seed = 7;
    for (const auto& [a, b] : testing::random_pairs(spec)) {
      for (auto kind : kAllKinds) {
        const auto ab = product(a, b, kind).hypergraph;
        const auto ba = product(b, a, kind).hypergraph;
        CHECK(is_isomorphic_under(ab, ba, swap_map(a.vertex_count(), b.vertex_count())));
        CHECK(validate(ab).simple);
        CHECK(is_connected(ab));
        const auto graph_kind = kind == ProductKind::Cartesian ? ProductKind::Cartesian : ProductKind::Strong;
        CHECK(two_section(ab).to_hypergraph() ==
              product(two_section(a).to_hypergraph(), two_section(b).to_hypergraph(), graph_kind).hypergraph);
        if (kind != ProductKind::Cartesian) CHECK(is_thin(ab).thin == (is_thin(a).thin && is_thin(b).thin));
      }
    }
  }

  TEST_CASE("associativity") {
    testing::CorpusSpec spec;
    spec.count = 30;
    spec.n_max = 4;
    spec.seed = 11;
    const auto all = testing::random_hypergraphs(spec);
    for (std::size_t i = 0; i + 2 < all.size(); i += 3) {
      for (auto kind : kAllKinds) {
        const auto left = product(product(all[i], all[i + 1], kind).hypergraph, all[i + 2], kind).hypergraph;
        const auto right = product(all[i], product(all[i + 1], all[i + 2], kind).hypergraph, kind).hypergraph;
        CHECK(left == right);
      }
    }
  }
}

TEST_SUITE("counting") {
  TEST_CASE("stirling2 and factorial") {
    for (std::size_t n = 1; n <= 10; ++n) CHECK(stirling2(n, 1) == 1);
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(0, 0) == 1);
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK_THROWS_AS(stirling2(2, 3), std::out_of_range);
    CHECK_THROWS_AS(factorial(21), std::out_of_range);
    Limits wide;
    wide.rank_max = 30;
    CHECK(factorial(25, wide) == BigInt("15511210043330985984000000"));
  }

  TEST_CASE("stirling2 matches surjection counts") {
    // k! S(n, k) counts surjections of an n-set onto a k-set.
    for (std::size_t n = 1; n <= 7; ++n)
      for (std::size_t k = 1; k <= n; ++k)
        CHECK(factorial(k) * stirling2(n, k) == oracle::brute_count_maps(n, k, ProductKind::Strong));
  }

  TEST_CASE("formula examples") {
    const auto k2 = testing::complete_graph(2);
    const auto t3 = testing::single_edge(3);
    CHECK(count_noncartesian_formula(k2, k2, ProductKind::Normal) == 2);
    CHECK(count_noncartesian_formula(k2, k2, ProductKind::Strong) == 2);
    CHECK(count_noncartesian_formula(t3, k2, ProductKind::Normal) == 6);
    CHECK(count_noncartesian_formula(t3, k2, ProductKind::Strong) == 6);
    CHECK(count_noncartesian_formula(Hypergraph(3), t3, ProductKind::Strong) == 0);
    CHECK_THROWS_AS(count_noncartesian_formula(k2, k2, ProductKind::Cartesian), std::invalid_argument);
  }

  TEST_CASE("count_noncartesian_exact") {
    const auto k2 = testing::complete_graph(2);
    const auto strong = count_noncartesian_exact(k2, k2, ProductKind::Strong);
    CHECK(strong.formula_value == 2);
    CHECK(strong.enumerated_value == 2);
    const auto normal = count_noncartesian_exact(testing::single_edge(3), k2, ProductKind::Normal);
    CHECK(normal.formula_value == 6);
    CHECK(normal.enumerated_value == 6);
    CHECK(normal.agrees());
  }

  TEST_CASE("overlapping factor edges make the normal formula overcount") {
    const auto k2 = testing::complete_graph(2);
    const auto h2 = hg(4, {{0, 1, 2}, {0, 1, 3}});
    const auto r = count_noncartesian_exact(k2, h2, ProductKind::Normal);
    // Independent count: edges of the definition-scan product varying in both coordinates.
    const auto brute = oracle::brute_product(k2, h2, ProductKind::Normal);
    std::size_t varying = 0;
    for (const auto& e : brute.edges()) {
      bool a = false, b = false;
      for (VertexId v : e) {
        a |= v / 4 != e.front() / 4;
        b |= v % 4 != e.front() % 4;
      }
      varying += a && b;
    }
    CHECK(r.enumerated_value == varying);
    CHECK(r.enumerated_value < r.formula_value);
    CHECK_FALSE(edges_pairwise_linear(h2));
  }

  TEST_CASE("formula versus enumeration on random pairs") {
    testing::CorpusSpec spec;
    spec.count = 40;
    spec.n_max = 6;
    spec.rank_max = 4;
    spec.connected = false;
    for (const auto& [a, b] : testing::random_pairs(spec)) {
      const auto strong = count_noncartesian_exact(a, b, ProductKind::Strong);
      CHECK(strong.agrees());
      const auto normal = count_noncartesian_exact(a, b, ProductKind::Normal);
      CHECK(normal.enumerated_value <= normal.formula_value);
      if (edges_pairwise_linear(a) && edges_pairwise_linear(b)) CHECK(normal.agrees());
    }
  }
}
