#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hyperfactor {

/// Dense 0-based vertex index.
using VertexId = std::uint32_t;

/// Strictly ascending list of vertex ids.
using Hyperedge = std::vector<VertexId>;

/// Strictly ascending list of vertex ids.
using VertexSet = std::vector<VertexId>;

using VertexPair = std::pair<VertexId, VertexId>;

/// A finite hypergraph on the vertices [0, n) without multiple edges.
///
/// The edge set is kept in canonical form: every edge sorted ascending, the
/// edges themselves sorted lexicographically, duplicates removed. Two
/// hypergraphs are equal iff they have the same vertex count and edge set.
/// Simplicity is *not* enforced here; see validate().
class Hypergraph {
 public:
  /// The trivial hypergraph K1.
  Hypergraph() = default;

  /// Throws std::invalid_argument for n == 0, empty edges, repeated vertices
  /// inside an edge, or vertex ids >= n. Duplicate edges collapse.
  explicit Hypergraph(std::size_t n, std::vector<Hyperedge> edges = {});

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Hyperedge> edges() const { return edges_; }
  const Hyperedge& edge(std::size_t i) const { return edges_[i]; }

  /// `e` must be sorted ascending.
  bool contains_edge(std::span<const VertexId> e) const;

  /// max |e|, 0 for an edgeless hypergraph.
  std::size_t rank() const;
  std::size_t degree(VertexId v) const;
  std::size_t max_degree() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_ = 1;
  std::vector<Hyperedge> edges_;
};

/// A simple undirected graph stored as ascending adjacency lists.
class Graph {
 public:
  Graph() = default;
  /// Self-loops throw std::invalid_argument; repeated pairs collapse.
  explicit Graph(std::size_t n, std::span<const VertexPair> edges = {});

  /// Requires every edge of `h` to have exactly two vertices.
  static Graph from_hypergraph(const Hypergraph& h);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  bool adjacent(VertexId u, VertexId v) const;

  /// All edges as (u, v) with u < v, ascending.
  std::vector<VertexPair> edge_list() const;
  Hypergraph to_hypergraph() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<VertexId>> adjacency_ = std::vector<std::vector<VertexId>>(1);
  std::size_t edge_count_ = 0;
};

struct ValidationReport {
  bool simple = true;
  bool connected = true;
  bool thin = true;

  /// Set when an edge of size < 2 makes the hypergraph non-simple.
  std::optional<Hyperedge> undersized_edge;
  /// (e, f) with e a proper subset of f.
  std::optional<std::pair<Hyperedge, Hyperedge>> contained_edges;
  /// Two vertices in different components.
  std::optional<VertexPair> disconnected_pair;
  /// Two distinct vertices with equal closed neighborhoods.
  std::optional<VertexPair> twin_pair;
};

ValidationReport validate(const Hypergraph& h);
bool is_simple(const Hypergraph& h);

/// N[v]; throws std::out_of_range for v >= n.
VertexSet closed_neighborhood(const Hypergraph& h, VertexId v);
VertexSet closed_neighborhood(const Graph& g, VertexId v);
std::vector<VertexSet> closed_neighborhoods(const Hypergraph& h);

struct ThinReport {
  bool thin = true;
  std::optional<VertexPair> witness;
};

ThinReport is_thin(const Hypergraph& h);
ThinReport is_thin(const Graph& g);

/// Classes of at least two vertices sharing a closed neighborhood.
std::vector<VertexSet> twin_classes(const Hypergraph& h);

/// Vertices adjacent iff they share an edge.
Graph two_section(const Hypergraph& h);

bool is_connected(const Hypergraph& h);
bool is_connected(const Graph& g);

/// Components ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const Hypergraph& h);
std::vector<VertexSet> connected_components(const Graph& g);

/// Shortest path length, std::nullopt when u and v are disconnected.
/// Computed by breadth-first search on the 2-section.
std::optional<std::size_t> distance(const Hypergraph& h, VertexId u, VertexId v);

/// Breadth-first distances from `source`; unreachable vertices hold SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, VertexId source);

/// Induced partial hypergraph on a vertex subset, relabelled densely in
/// ascending order of the parent ids.
struct SubHypergraph {
  Hypergraph hypergraph;
  std::vector<VertexId> to_parent;
};

/// `vertices` must be non-empty, ascending, and in range.
SubHypergraph induced(const Hypergraph& h, std::span<const VertexId> vertices);

/// Keeps only the edges selected by `keep` (indexed like h.edges()).
Hypergraph spanning_partial(const Hypergraph& h, const std::vector<bool>& keep);

}  // namespace hyperfactor
