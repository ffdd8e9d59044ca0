#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hyperfactor/hypergraph.hpp"
#include "hyperfactor/limits.hpp"

namespace hyperfactor {

/// Cartesian, normal (min) and strong (max) hypergraph products.
enum class ProductKind { Cartesian, Normal, Strong };

std::string_view to_string(ProductKind kind);
/// Accepts "cartesian", "normal", "strong"; throws std::invalid_argument.
ProductKind parse_product_kind(std::string_view name);

/// Per-vertex coordinate tuples realizing a product structure.
///
/// The tuples form a bijection from [0, n) onto the box dims[0] x ... x dims[k-1].
/// The row-major encoding of a tuple (first factor most significant) is the
/// canonical product vertex id.
class Coordinates {
 public:
  /// Zero factors on a single vertex (the coordinates of K1).
  Coordinates() = default;

  /// `coord[v]` is the tuple of vertex v. Throws std::invalid_argument unless
  /// the tuples are a bijection onto the box.
  Coordinates(std::vector<std::size_t> dims, const std::vector<std::vector<std::uint32_t>>& coord);

  /// Vertex v gets the mixed-radix digits of v.
  static Coordinates row_major(std::vector<std::size_t> dims);

  std::size_t factor_count() const { return dims_.size(); }
  std::size_t vertex_count() const { return n_; }
  std::span<const std::size_t> dims() const { return dims_; }
  std::span<const std::uint32_t> of(VertexId v) const {
    return std::span<const std::uint32_t>(digits_).subspan(v * dims_.size(), dims_.size());
  }
  std::uint32_t at(VertexId v, std::size_t factor) const { return digits_[v * dims_.size() + factor]; }

  /// Mixed-radix index of v's sub-tuple over `factors` (taken in the given order).
  std::size_t encode(VertexId v, std::span<const std::size_t> factors) const;
  /// Product of dims over `factors`.
  std::size_t volume(std::span<const std::size_t> factors) const;

  std::vector<std::vector<std::uint32_t>> tuples() const;

  friend bool operator==(const Coordinates&, const Coordinates&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::uint32_t> digits_;
  std::size_t n_ = 1;
};

struct ProductResult {
  Hypergraph hypergraph;
  Coordinates coords;  // two factors, row-major: v = v1 * n2 + v2
};

/// Builds H1 * H2. Cartesian edges are e1 x {x2} and {x1} x e2. Non-Cartesian
/// edges are the graphs {(x, f(x))} of injective maps from the smaller edge
/// into the larger one (Normal) or of surjective maps from the larger edge
/// onto the smaller one (Strong), over all edge pairs.
///
/// Throws NotSimple for non-simple factors and CapExceeded when the vertex or
/// edge count would pass the configured caps.
ProductResult product(const Hypergraph& h1, const Hypergraph& h2, ProductKind kind,
                      const Limits& limits = {});

/// Left fold of `product` over `factors`. An empty list yields K1.
ProductResult product_all(std::span<const Hypergraph> factors, ProductKind kind, const Limits& limits = {});

/// Cartesian(color) iff the edge varies in exactly coordinate `color`.
struct EdgeLabel {
  std::optional<std::size_t> color;
  bool cartesian() const { return color.has_value(); }
  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

/// One label per edge of `h`, aligned with h.edges(). Throws
/// std::invalid_argument when `c` does not cover exactly the vertices of `h`.
std::vector<EdgeLabel> classify_edges(const Hypergraph& h, const Coordinates& c);

/// Number of distinct sub-tuples over `factors` among the vertices of `e`.
std::size_t projection_size(std::span<const VertexId> e, const Coordinates& c,
                            std::span<const std::size_t> factors);

/// The H_j-layer through w: the induced partial hypergraph on all vertices
/// agreeing with w outside coordinate j.
SubHypergraph layer(const Hypergraph& h, const Coordinates& c, std::size_t j, VertexId w);

}  // namespace hyperfactor
