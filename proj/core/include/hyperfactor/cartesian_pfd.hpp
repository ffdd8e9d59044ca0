#pragma once

#include <vector>

#include "hyperfactor/hypergraph.hpp"
#include "hyperfactor/limits.hpp"
#include "hyperfactor/products.hpp"

namespace hyperfactor {

struct GraphFactorization {
  std::vector<Graph> factors;
  Coordinates coords;
  /// Factor index of each edge, aligned with Graph::edge_list().
  std::vector<std::size_t> edge_color;
};

struct HypergraphFactorization {
  std::vector<Hypergraph> factors;
  Coordinates coords;
  /// Factor index of each hyperedge, aligned with Hypergraph::edges().
  std::vector<std::size_t> edge_color;
};

/// Prime factor decomposition of a connected graph w.r.t. the Cartesian product.
///
/// Edges are grouped by the transitive closure of two square-property
/// relations: the Djokovic-Winkler relation (xy ~ uv iff
/// d(x,u) + d(y,v) != d(x,v) + d(y,u)) and the relation joining two edges
/// xy, xz that lie on no common chordless square. The closure classes are the
/// prime factors; coordinates come from layer traversal. The result is checked
/// by rebuilding the product. K1 has zero factors.
///
/// Throws NotConnected. Throws InternalError if the reconstruction fails.
GraphFactorization graph_cartesian_pfd(const Graph& g, const Limits& limits = {});

/// Prime factor decomposition of a connected simple hypergraph w.r.t. the
/// Cartesian product: factor the 2-section, check that every hyperedge lies in
/// a single graph-factor layer, then group graph factors into the finest
/// grouping whose projections rebuild the hypergraph edge-exactly.
///
/// Factor order follows the smallest graph-factor index of each group.
/// Throws NotConnected / NotSimple, InternalError on a failed invariant.
HypergraphFactorization hypergraph_cartesian_pfd(const Hypergraph& h, const Limits& limits = {});

/// Recomputes the vertex coordinates of `h` from the edge coloring in `f` by
/// layer traversal and checks that the product of f.factors reproduces `h`
/// under them. Throws std::invalid_argument for an inconsistent factorization.
Coordinates assign_coordinates(const Hypergraph& h, const HypergraphFactorization& f,
                               const Limits& limits = {});

}  // namespace hyperfactor
