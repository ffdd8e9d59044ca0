#include "hyperfactor/cartesian_pfd.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

#include "detail/factor_split.hpp"
#include "hyperfactor/errors.hpp"
#include "hyperfactor/isomorphism.hpp"

namespace hyperfactor {

namespace {

class EdgeClasses {
 public:
  explicit EdgeClasses(std::size_t m) : parent_(m) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  /// Dense labels numbered by first occurrence in edge order.
  std::pair<std::vector<std::size_t>, std::size_t> labels() {
    std::vector<std::size_t> out(parent_.size());
    std::map<std::size_t, std::size_t> dense;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      auto [it, inserted] = dense.emplace(find(i), dense.size());
      out[i] = it->second;
    }
    return {out, dense.size()};
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<Hyperedge> as_hyperedges(std::span<const VertexPair> pairs) {
  std::vector<Hyperedge> out;
  out.reserve(pairs.size());
  for (auto [u, v] : pairs) out.push_back({u, v});
  return out;
}

/// Rebuilds the product of `factors` and compares it with `h` relabelled by
/// the row-major encoding of `coords`.
bool reconstructs(const Hypergraph& h, std::span<const Hypergraph> factors, const Coordinates& coords,
                  const Limits& limits) {
  if (factors.empty()) return h.vertex_count() == 1 && h.edge_count() == 0;
  std::vector<std::size_t> all(coords.factor_count());
  std::iota(all.begin(), all.end(), std::size_t{0});
  VertexBijection map(h.vertex_count());
  for (VertexId v = 0; v < h.vertex_count(); ++v) map[v] = static_cast<VertexId>(coords.encode(v, all));
  return relabel(h, map) == product_all(factors, ProductKind::Cartesian, limits).hypergraph;
}

}  // namespace

GraphFactorization graph_cartesian_pfd(const Graph& g, const Limits& limits) {
  if (!is_connected(g)) throw NotConnected("Cartesian factorization needs a connected graph");
  const std::size_t n = g.vertex_count();
  GraphFactorization out;
  if (n == 1) return out;

  const auto edges = g.edge_list();
  const std::size_t m = edges.size();

  std::vector<std::vector<std::uint32_t>> dist(n);
  for (VertexId v = 0; v < n; ++v) {
    const auto d = bfs_distances(g, v);
    dist[v].assign(d.begin(), d.end());
  }

  EdgeClasses classes(m);

  // Djokovic-Winkler: xy ~ uv iff d(x,u) + d(y,v) != d(x,v) + d(y,u).
  for (std::size_t i = 0; i < m; ++i) {
    const auto [x, y] = edges[i];
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto [u, v] = edges[j];
      if (dist[x][u] + dist[y][v] != dist[x][v] + dist[y][u]) classes.unite(i, j);
    }
  }

  // xy ~ xz when y, z are non-adjacent and x is their only common neighbor,
  // i.e. the two edges span no chordless square.
  const auto edge_index = [&](VertexId a, VertexId b) {
    const VertexPair key{std::min(a, b), std::max(a, b)};
    return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), key) - edges.begin());
  };
  for (VertexId x = 0; x < n; ++x) {
    const auto nbrs = g.neighbors(x);
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        const VertexId y = nbrs[a];
        const VertexId z = nbrs[b];
        if (g.adjacent(y, z)) continue;
        const auto ny = g.neighbors(y);
        const auto nz = g.neighbors(z);
        std::vector<VertexId> common;
        std::set_intersection(ny.begin(), ny.end(), nz.begin(), nz.end(), std::back_inserter(common));
        if (common.size() == 1) classes.unite(edge_index(x, y), edge_index(x, z));
      }
    }
  }

  auto [colors, count] = classes.labels();
  const auto hyperedges = as_hyperedges(edges);
  Coordinates coords;
  try {
    coords = detail::coordinates_from_coloring(n, hyperedges, colors, count);
  } catch (const std::invalid_argument& e) {
    throw InternalError(std::string("graph factorization produced an invalid coloring: ") + e.what());
  }

  const Hypergraph as_h = g.to_hypergraph();
  std::vector<Hypergraph> factor_h;
  for (std::size_t c = 0; c < count; ++c) {
    const std::size_t only[] = {c};
    factor_h.push_back(detail::factor_projection(as_h, coords, only));
  }
  if (!reconstructs(as_h, factor_h, coords, limits)) {
    throw InternalError("graph factors do not reconstruct the input");
  }

  for (const auto& f : factor_h) out.factors.push_back(Graph::from_hypergraph(f));
  out.coords = std::move(coords);
  out.edge_color = std::move(colors);
  return out;
}

HypergraphFactorization hypergraph_cartesian_pfd(const Hypergraph& h, const Limits& limits) {
  if (!is_simple(h)) throw NotSimple("Cartesian factorization needs a simple hypergraph");
  const Graph g = two_section(h);
  if (!is_connected(g)) throw NotConnected("Cartesian factorization needs a connected hypergraph");

  HypergraphFactorization out;
  if (h.vertex_count() == 1) return out;

  const GraphFactorization gf = graph_cartesian_pfd(g, limits);
  const auto pairs = g.edge_list();
  const auto pair_color = [&](VertexId a, VertexId b) {
    const auto it = std::lower_bound(pairs.begin(), pairs.end(), VertexPair{a, b});
    return gf.edge_color[static_cast<std::size_t>(it - pairs.begin())];
  };

  // Complete graphs embed in a single layer, so every hyperedge is monochromatic.
  std::vector<std::size_t> graph_color(h.edge_count());
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const auto& e = h.edge(i);
    const std::size_t c = pair_color(e[0], e[1]);
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b)
        if (pair_color(e[a], e[b]) != c) throw InternalError("hyperedge spans several Cartesian graph factors");
    graph_color[i] = c;
  }

  const Coordinates& gc = gf.coords;
  const std::size_t k = gc.factor_count();
  const auto splits = [&](std::span<const std::size_t> subset) {
    const auto rest = detail::complement(k, subset);
    const Hypergraph a = detail::factor_projection(h, gc, subset);
    const Hypergraph b = detail::factor_projection(h, gc, rest);
    const auto map = detail::split_bijection(gc, subset, rest);
    return relabel(h, map) == product(a, b, ProductKind::Cartesian, limits).hypergraph;
  };
  const auto groups = detail::minimal_split_groups(k, splits);

  std::vector<std::size_t> group_of(k);
  for (std::size_t gi = 0; gi < groups.size(); ++gi)
    for (std::size_t idx : groups[gi]) group_of[idx] = gi;
  out.edge_color.reserve(h.edge_count());
  for (std::size_t c : graph_color) out.edge_color.push_back(group_of[c]);

  // Re-derive coordinates from the grouped coloring so that factor labels
  // follow the layer through vertex 0 in ascending vertex order.
  try {
    out.coords = detail::coordinates_from_coloring(h.vertex_count(), h.edges(), out.edge_color, groups.size());
  } catch (const std::invalid_argument& e) {
    throw InternalError(std::string("grouped coloring is not a product coloring: ") + e.what());
  }
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const std::size_t only[] = {gi};
    out.factors.push_back(detail::factor_projection(h, out.coords, only));
  }

  if (!reconstructs(h, out.factors, out.coords, limits)) {
    throw InternalError("hypergraph factors do not reconstruct the input");
  }
  return out;
}

Coordinates assign_coordinates(const Hypergraph& h, const HypergraphFactorization& f, const Limits& limits) {
  if (f.edge_color.size() != h.edge_count()) throw std::invalid_argument("factorization does not match hypergraph");
  if (f.factors.empty()) {
    if (h.vertex_count() != 1) throw std::invalid_argument("empty factorization of a nontrivial hypergraph");
    return Coordinates();
  }
  const Coordinates coords =
      detail::coordinates_from_coloring(h.vertex_count(), h.edges(), f.edge_color, f.factors.size());
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (coords.dims()[i] != f.factors[i].vertex_count()) throw std::invalid_argument("factor size mismatch");
  }
  if (!reconstructs(h, f.factors, coords, limits)) {
    throw std::invalid_argument("factors do not reconstruct the hypergraph under the derived coordinates");
  }
  return coords;
}

}  // namespace hyperfactor
