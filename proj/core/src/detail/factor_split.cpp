#include "detail/factor_split.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hyperfactor::detail {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

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

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

IndexSet complement(std::size_t count, std::span<const std::size_t> subset) {
  IndexSet out;
  for (std::size_t i = 0; i < count; ++i)
    if (std::find(subset.begin(), subset.end(), i) == subset.end()) out.push_back(i);
  return out;
}

Hypergraph factor_projection(const Hypergraph& h, const Coordinates& c, std::span<const std::size_t> factors,
                             VertexId anchor) {
  const IndexSet others = complement(c.factor_count(), factors);
  const std::size_t size = c.volume(factors);
  std::vector<std::int64_t> local(h.vertex_count(), -1);
  std::size_t members = 0;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    const bool same = std::all_of(others.begin(), others.end(), [&](std::size_t k) { return c.at(v, k) == c.at(anchor, k); });
    if (!same) continue;
    local[v] = static_cast<std::int64_t>(c.encode(v, factors));
    ++members;
  }
  if (members != size) throw std::invalid_argument("coordinates do not span a full layer");

  std::vector<Hyperedge> edges;
  for (const auto& e : h.edges()) {
    Hyperedge mapped;
    for (VertexId v : e) {
      if (local[v] < 0) break;
      mapped.push_back(static_cast<VertexId>(local[v]));
    }
    if (mapped.size() == e.size()) edges.push_back(std::move(mapped));
  }
  return Hypergraph(size, std::move(edges));
}

VertexBijection split_bijection(const Coordinates& c, std::span<const std::size_t> first,
                                std::span<const std::size_t> second) {
  const std::size_t n2 = c.volume(second);
  VertexBijection map(c.vertex_count());
  for (VertexId v = 0; v < c.vertex_count(); ++v)
    map[v] = static_cast<VertexId>(c.encode(v, first) * n2 + c.encode(v, second));
  return map;
}

Coordinates group_coordinates(const Coordinates& c, const std::vector<IndexSet>& groups) {
  std::vector<std::size_t> dims;
  for (const auto& g : groups) dims.push_back(c.volume(g));
  std::vector<std::vector<std::uint32_t>> tuples(c.vertex_count());
  for (VertexId v = 0; v < c.vertex_count(); ++v)
    for (const auto& g : groups) tuples[v].push_back(static_cast<std::uint32_t>(c.encode(v, g)));
  return Coordinates(std::move(dims), tuples);
}

std::vector<IndexSet> minimal_split_groups(std::size_t count,
                                           const std::function<bool(std::span<const std::size_t>)>& splits) {
  std::vector<IndexSet> groups;
  IndexSet remaining(count);
  std::iota(remaining.begin(), remaining.end(), std::size_t{0});

  while (remaining.size() > 1) {
    std::optional<IndexSet> found;
    for (std::size_t k = 1; k < remaining.size() && !found; ++k) {
      // Lexicographic k-combinations of positions into `remaining`.
      std::vector<std::size_t> pos(k);
      std::iota(pos.begin(), pos.end(), std::size_t{0});
      while (true) {
        IndexSet subset;
        for (std::size_t p : pos) subset.push_back(remaining[p]);
        if (splits(subset)) {
          found = std::move(subset);
          break;
        }
        std::size_t i = k;
        while (i > 0 && pos[i - 1] == remaining.size() - k + (i - 1)) --i;
        if (i == 0) break;
        ++pos[i - 1];
        for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
      }
    }
    if (!found) break;
    IndexSet rest;
    std::set_difference(remaining.begin(), remaining.end(), found->begin(), found->end(), std::back_inserter(rest));
    groups.push_back(std::move(*found));
    remaining = std::move(rest);
  }
  if (!remaining.empty()) groups.push_back(std::move(remaining));
  std::sort(groups.begin(), groups.end(), [](const IndexSet& a, const IndexSet& b) { return a.front() < b.front(); });
  return groups;
}

VertexSet color_layer_through_origin(std::size_t n, std::span<const Hyperedge> edges,
                                     std::span<const std::size_t> colors, std::size_t color) {
  DisjointSets sets(n);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (colors[i] == color)
      for (VertexId v : edges[i]) sets.unite(edges[i].front(), v);
  VertexSet layer;
  for (VertexId v = 0; v < n; ++v)
    if (sets.find(v) == sets.find(0)) layer.push_back(v);
  return layer;
}

Coordinates coordinates_from_coloring(std::size_t n, std::span<const Hyperedge> edges,
                                      std::span<const std::size_t> colors, std::size_t color_count) {
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::uint32_t>> tuples(n);
  for (std::size_t color = 0; color < color_count; ++color) {
    const VertexSet layer = color_layer_through_origin(n, edges, colors, color);

    DisjointSets co(n);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (colors[i] != color)
        for (VertexId v : edges[i]) co.unite(edges[i].front(), v);

    // Each co-layer component must meet the layer through 0 exactly once.
    std::vector<std::int64_t> digit_of_root(n, -1);
    for (std::size_t pos = 0; pos < layer.size(); ++pos) {
      auto& slot = digit_of_root[co.find(layer[pos])];
      if (slot >= 0) throw std::invalid_argument("edge coloring is not a product coloring");
      slot = static_cast<std::int64_t>(pos);
    }
    for (VertexId v = 0; v < n; ++v) {
      const auto digit = digit_of_root[co.find(v)];
      if (digit < 0) throw std::invalid_argument("edge coloring is not a product coloring");
      tuples[v].push_back(static_cast<std::uint32_t>(digit));
    }
    dims.push_back(layer.size());
  }
  return Coordinates(std::move(dims), tuples);  // rejects non-bijective tuples
}

}  // namespace hyperfactor::detail
