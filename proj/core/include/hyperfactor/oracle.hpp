#pragma once

// Brute-force reference implementations. Nothing here calls into the fast
// paths; only the Hypergraph value type, the ProductKind tag and the caps are
// shared.

#include <optional>
#include <vector>

#include "hyperfactor/hypergraph.hpp"
#include "hyperfactor/limits.hpp"
#include "hyperfactor/products.hpp"

namespace hyperfactor::oracle {

/// Product built by testing every subset of e1 x e2 (and every Cartesian
/// candidate) against the edge definitions. Vertex (x1, x2) gets id x1*n2+x2.
/// Cap: |e1|*|e2| <= 16 for every edge pair of a non-Cartesian product.
Hypergraph brute_product(const Hypergraph& h1, const Hypergraph& h2, ProductKind kind, const Limits& limits = {});

/// One verified split H = first * second; `bijection[v]` is x1*n2 + x2.
struct BruteSplit {
  Hypergraph first;
  Hypergraph second;
  std::vector<VertexId> bijection;
};

struct BruteFactorization {
  /// Splits found on the way down, outermost first.
  std::vector<BruteSplit> splits;
  /// Prime factors; K1 yields none, a prime H yields {H}.
  std::vector<Hypergraph> factors;
};

/// Exhaustive search over all ways of writing V as n1 x n2 (n1, n2 >= 2),
/// with vertex 0 fixed at (0, 0), followed by recursion on the factors.
/// Throws CapExceeded above limits.brute_pfd_max_vertices.
BruteFactorization brute_pfd(const Hypergraph& h, ProductKind kind, const Limits& limits = {});

/// Number of injective (Normal) or surjective (Strong) maps from an a-set to a
/// b-set, by enumerating all b^a maps. Cap: a, b <= limits.brute_maps_max.
std::size_t brute_count_maps(std::size_t a, std::size_t b, ProductKind kind, const Limits& limits = {});

/// Edges of H that are dispensable, evaluated on H's own closed
/// neighborhoods. Sorted like H.edges().
std::vector<Hyperedge> brute_dispensable(const Hypergraph& h, const Limits& limits = {});

/// Length of a shortest alternating sequence v0 e1 v1 ... ek vk with distinct
/// vertices and distinct edges, found by exhaustive search; nullopt when u and
/// v are not joined.
std::optional<std::size_t> brute_distance(const Hypergraph& h, VertexId u, VertexId v, const Limits& limits = {});

/// Isomorphism test over all vertex permutations, after cheap equality and
/// degree/edge-size profile checks.
bool brute_isomorphic(const Hypergraph& a, const Hypergraph& b, const Limits& limits = {});

/// Multiset equality up to isomorphism, using brute_isomorphic.
bool same_factors(const std::vector<Hypergraph>& a, const std::vector<Hypergraph>& b, const Limits& limits = {});

}  // namespace hyperfactor::oracle
