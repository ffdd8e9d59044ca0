#pragma once

#include <optional>
#include <vector>

#include "hyperfactor/counting.hpp"
#include "hyperfactor/hypergraph.hpp"
#include "hyperfactor/isomorphism.hpp"
#include "hyperfactor/limits.hpp"
#include "hyperfactor/products.hpp"

namespace hyperfactor {

using IndexSet = std::vector<std::size_t>;

/// Spanning partial hypergraph H^R keeping the edges e with |p_i(e)| = 1 for
/// every coordinate i outside R.
struct LayerHypergraph {
  IndexSet factors;  // R, ascending
  Hypergraph hypergraph;
  Coordinates coords;
};

/// Throws std::invalid_argument when R has an index >= c.factor_count() or a
/// repeated index, or when `c` does not cover `h`.
LayerHypergraph layer_hypergraph(const Hypergraph& h, const Coordinates& c, std::span<const std::size_t> factors);

/// Splits H^R into connected components (isolated vertices count as K1) and
/// returns the component through vertex 0 iff all components are pairwise
/// isomorphic and not all of them are K1. Components are compared with the
/// coordinate-induced bijection first and by search only if that fails.
///
/// When the component through vertex 0 covers a full R-layer, the
/// representative is relabelled by the sub-tuple over R; otherwise densely in
/// ascending vertex order.
std::optional<Hypergraph> components_all_isomorphic(const LayerHypergraph& layer, const Limits& limits = {});

/// Outcome of testing a candidate split H = H_S * H_{I\S}.
struct CompletenessVerdict {
  /// E(H) equals E(H_S * H_{I\S}) under the coordinate bijection.
  bool exact = false;
  /// Every edge varying in both parts satisfies the non-Cartesian edge
  /// condition and their number equals the formula value.
  bool counting = false;
  BigInt formula_value;
  std::size_t valid_noncartesian = 0;
  std::size_t invalid_noncartesian = 0;
  /// Both candidate factors have pairwise edge intersections of size <= 1,
  /// so the counting criterion is expected to agree with the exact one.
  bool linear_factors = false;
};

/// `h_s` / `h_co` must be labelled by the sub-tuples over S and I\S.
CompletenessVerdict noncartesian_complete(const Hypergraph& h, const Coordinates& c, std::span<const std::size_t> subset,
                                          const Hypergraph& h_s, const Hypergraph& h_co, ProductKind kind,
                                          const Limits& limits = {});

/// One candidate subset examined by pfd().
struct SplitAttempt {
  IndexSet subset;
  bool components_isomorphic = false;
  std::optional<CompletenessVerdict> verdict;
  bool accepted = false;
};

struct PrimeFactorReport {
  ProductKind kind = ProductKind::Strong;
  std::vector<Hypergraph> factors;
  /// Partition of the skeleton factor indices, one block per factor.
  std::vector<IndexSet> index_partition;
  /// One digit per factor; row-major encoding maps H onto the product.
  Coordinates coords;
  /// Cartesian prime factors of the skeleton and their coordinates.
  std::vector<Hypergraph> skeleton_factors;
  Coordinates skeleton_coords;
  std::size_t removed_edges = 0;
  /// The hypergraph skeleton was disconnected and the skeleton factors come
  /// from the graph skeleton of the 2-section instead.
  bool two_section_skeleton = false;
  /// The product of `factors` rebuilt H edge-exactly under `coords`.
  bool certificate = false;
  std::vector<SplitAttempt> attempts;
};

/// Prime factor decomposition of a connected, simple, thin hypergraph w.r.t.
/// the normal or strong product.
///
///  1. skeleton = Cartesian skeleton of H, or the graph skeleton of [H]_2
///     when the former is disconnected
///  2. Cartesian PFD of the skeleton gives coordinates over the index set I
///  3. starting from J = I, find the lexicographically first smallest proper
///     S of J whose layer hypergraphs H^S and H^{I\S} have pairwise
///     isomorphic components and whose split rebuilds H exactly; record S as
///     a prime factor, drop it from J and repeat; the rest of J is the last
///     factor.
///
/// Factors are ordered by their smallest skeleton factor index. Throws
/// NotSimple, NotConnected, NotThin (listing twin classes), CapExceeded, and
/// std::invalid_argument for kind == Cartesian.
PrimeFactorReport pfd(const Hypergraph& h, ProductKind kind, const Limits& limits = {});

}  // namespace hyperfactor
