#pragma once

#include <optional>
#include <vector>

#include "hyperfactor/hypergraph.hpp"
#include "hyperfactor/limits.hpp"

namespace hyperfactor {

/// map[v] is the image of source vertex v.
using VertexBijection = std::vector<VertexId>;

VertexBijection identity_bijection(std::size_t n);
bool is_bijection(const VertexBijection& b, std::size_t n);

/// Image of `h` under `b`. Throws std::invalid_argument if `b` is not a
/// bijection on [0, n).
Hypergraph relabel(const Hypergraph& h, const VertexBijection& b);

/// True iff `b` maps E(h1) exactly onto E(h2). Throws std::invalid_argument on
/// a vertex-count mismatch.
bool is_isomorphic_under(const Hypergraph& h1, const Hypergraph& h2, const VertexBijection& b);

/// Backtracking search with degree / edge-size / neighborhood pruning.
/// Deterministic: candidates are tried in ascending vertex order. Throws
/// CapExceeded above limits.iso_max_vertices.
std::optional<VertexBijection> find_isomorphism(const Hypergraph& h1, const Hypergraph& h2,
                                                const Limits& limits = {});

}  // namespace hyperfactor
