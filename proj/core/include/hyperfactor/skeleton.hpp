#pragma once

#include <vector>

#include "hyperfactor/hypergraph.hpp"

namespace hyperfactor {

/// Dispensable pairs of the 2-section together with the hyperedges they remove.
struct DispensableSet {
  std::vector<VertexPair> graph_pairs;  // ascending, u < v
  std::vector<Hyperedge> hyperedges;    // D(H), canonical order
};

struct SkeletonResult {
  Hypergraph skeleton;  // spanning: same vertices, E(H) minus D(H)
  DispensableSet removed;
  /// The skeleton is only uniquely meaningful for thin inputs; false flags
  /// that the result was computed literally without that guarantee.
  bool input_thin = true;
};

/// Edges {x, y} of `g` for which some vertex z satisfies
///   N[x] & N[y] < N[x] & N[z]  or  N[x] < N[z] < N[y],   and
///   N[x] & N[y] < N[y] & N[z]  or  N[y] < N[z] < N[x]
/// with "<" strict inclusion. Candidate z range over N(x) | N(y).
std::vector<VertexPair> dispensable_graph_pairs(const Graph& g);

/// Same predicate with z ranging over every vertex. Used to cross-check the
/// restricted scan.
std::vector<VertexPair> dispensable_graph_pairs_full_scan(const Graph& g);

/// Removes every hyperedge containing a dispensable pair of the 2-section.
/// Throws NotConnected for disconnected input and NotSimple for non-simple input.
SkeletonResult cartesian_skeleton(const Hypergraph& h);

}  // namespace hyperfactor
