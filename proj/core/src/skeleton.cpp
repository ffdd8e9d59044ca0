#include "hyperfactor/skeleton.hpp"

#include <algorithm>

#include "hyperfactor/errors.hpp"

namespace hyperfactor {

namespace {

bool strict_subset(const VertexSet& a, const VertexSet& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class DispensabilityTest {
 public:
  explicit DispensabilityTest(const Graph& g) : nbhd_(g.vertex_count()) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) nbhd_[v] = closed_neighborhood(g, v);
  }

  bool holds(VertexId x, VertexId y, VertexId z) const {
    const auto& nx = nbhd_[x];
    const auto& ny = nbhd_[y];
    const auto& nz = nbhd_[z];
    const auto xy = intersect(nx, ny);
    const bool first = strict_subset(xy, intersect(nx, nz)) || (strict_subset(nx, nz) && strict_subset(nz, ny));
    if (!first) return false;
    return strict_subset(xy, intersect(ny, nz)) || (strict_subset(ny, nz) && strict_subset(nz, nx));
  }

 private:
  std::vector<VertexSet> nbhd_;
};

}  // namespace

std::vector<VertexPair> dispensable_graph_pairs(const Graph& g) {
  const DispensabilityTest test(g);
  std::vector<VertexPair> out;
  VertexSet candidates;
  for (auto [x, y] : g.edge_list()) {
    const auto nx = g.neighbors(x);
    const auto ny = g.neighbors(y);
    candidates.clear();
    std::set_union(nx.begin(), nx.end(), ny.begin(), ny.end(), std::back_inserter(candidates));
    for (VertexId z : candidates) {
      if (z != x && z != y && test.holds(x, y, z)) {
        out.emplace_back(x, y);
        break;
      }
    }
  }
  return out;
}

std::vector<VertexPair> dispensable_graph_pairs_full_scan(const Graph& g) {
  const DispensabilityTest test(g);
  std::vector<VertexPair> out;
  for (auto [x, y] : g.edge_list()) {
    for (VertexId z = 0; z < g.vertex_count(); ++z) {
      if (test.holds(x, y, z)) {
        out.emplace_back(x, y);
        break;
      }
    }
  }
  return out;
}

SkeletonResult cartesian_skeleton(const Hypergraph& h) {
  if (!is_simple(h)) throw NotSimple("Cartesian skeleton needs a simple hypergraph");
  const Graph g = two_section(h);
  if (!is_connected(g)) throw NotConnected("Cartesian skeleton needs a connected hypergraph");

  SkeletonResult result;
  result.input_thin = is_thin(h).thin;
  result.removed.graph_pairs = dispensable_graph_pairs(g);

  std::vector<bool> keep(h.edge_count(), true);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const auto& e = h.edge(i);
    for (auto [x, y] : result.removed.graph_pairs) {
      if (std::binary_search(e.begin(), e.end(), x) && std::binary_search(e.begin(), e.end(), y)) {
        keep[i] = false;
        result.removed.hyperedges.push_back(e);
        break;
      }
    }
  }
  result.skeleton = spanning_partial(h, keep);
  return result;
}

}  // namespace hyperfactor
