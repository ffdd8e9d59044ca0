#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hyperfactor/hypergraph.hpp"
#include "hyperfactor/isomorphism.hpp"
#include "hyperfactor/products.hpp"

namespace hyperfactor::detail {

using IndexSet = std::vector<std::size_t>;

IndexSet complement(std::size_t count, std::span<const std::size_t> subset);

/// Vertices agreeing with `anchor` on every coordinate outside `factors`,
/// relabelled by their sub-tuple over `factors`. The induced edges are kept.
Hypergraph factor_projection(const Hypergraph& h, const Coordinates& c, std::span<const std::size_t> factors,
                             VertexId anchor = 0);

/// v -> encode(v, first) * volume(second) + encode(v, second).
VertexBijection split_bijection(const Coordinates& c, std::span<const std::size_t> first,
                                std::span<const std::size_t> second);

/// Coordinates with one digit per group: the sub-tuple index over that group.
Coordinates group_coordinates(const Coordinates& c, const std::vector<IndexSet>& groups);

/// Repeatedly takes the lexicographically first smallest proper subset S of
/// the remaining indices for which `splits(S)` holds, until none does. The
/// rest forms the last group. Groups are returned ordered by smallest index.
std::vector<IndexSet> minimal_split_groups(std::size_t count,
                                           const std::function<bool(std::span<const std::size_t>)>& splits);

/// Coordinates from a proper edge coloring by layer traversal: digit i of v is
/// the position, inside the color-i layer through vertex 0, of the unique
/// vertex sharing v's component after deleting all color-i edges. Throws
/// std::invalid_argument if the coloring is not a product coloring.
Coordinates coordinates_from_coloring(std::size_t n, std::span<const Hyperedge> edges,
                                      std::span<const std::size_t> colors, std::size_t color_count);

/// Vertices of the color-`color` layer through vertex 0, ascending.
VertexSet color_layer_through_origin(std::size_t n, std::span<const Hyperedge> edges,
                                     std::span<const std::size_t> colors, std::size_t color);

}  // namespace hyperfactor::detail
