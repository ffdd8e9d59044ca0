#include "hyperfactor/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hyperfactor/errors.hpp"

namespace hyperfactor {

VertexBijection identity_bijection(std::size_t n) {
  VertexBijection b(n);
  std::iota(b.begin(), b.end(), VertexId{0});
  return b;
}

bool is_bijection(const VertexBijection& b, std::size_t n) {
  if (b.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (VertexId v : b) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

Hypergraph relabel(const Hypergraph& h, const VertexBijection& b) {
  if (!is_bijection(b, h.vertex_count())) throw std::invalid_argument("relabel: not a bijection");
  std::vector<Hyperedge> edges;
  edges.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    Hyperedge image;
    image.reserve(e.size());
    for (VertexId v : e) image.push_back(b[v]);
    edges.push_back(std::move(image));
  }
  return Hypergraph(h.vertex_count(), std::move(edges));
}

bool is_isomorphic_under(const Hypergraph& h1, const Hypergraph& h2, const VertexBijection& b) {
  if (h1.vertex_count() != h2.vertex_count()) {
    throw std::invalid_argument("isomorphism test needs equal vertex counts");
  }
  if (!is_bijection(b, h1.vertex_count())) throw std::invalid_argument("not a bijection");
  if (h1.edge_count() != h2.edge_count()) return false;
  return relabel(h1, b) == h2;
}

namespace {

struct Profile {
  std::vector<std::uint64_t> adjacency;               // 2-section as bitmasks
  std::vector<std::vector<std::size_t>> incident;     // edge ids per vertex
  std::vector<std::vector<std::size_t>> signature;    // pruning invariant per vertex
};

Profile make_profile(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  Profile p;
  p.adjacency.assign(n, 0);
  p.incident.assign(n, {});
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const auto& e = h.edge(i);
    for (VertexId v : e) {
      p.incident[v].push_back(i);
      for (VertexId w : e)
        if (w != v) p.adjacency[v] |= std::uint64_t{1} << w;
    }
  }
  p.signature.assign(n, {});
  for (VertexId v = 0; v < n; ++v) {
    auto& sig = p.signature[v];
    sig.push_back(p.incident[v].size());
    sig.push_back(static_cast<std::size_t>(std::popcount(p.adjacency[v])));
    std::vector<std::size_t> sizes;
    for (std::size_t i : p.incident[v]) sizes.push_back(h.edge(i).size());
    std::sort(sizes.begin(), sizes.end());
    sig.insert(sig.end(), sizes.begin(), sizes.end());
  }
  // Refine once with the sorted neighbor degrees.
  for (VertexId v = 0; v < n; ++v) {
    std::vector<std::size_t> nbr;
    for (VertexId w = 0; w < n; ++w)
      if (p.adjacency[v] >> w & 1U) nbr.push_back(p.incident[w].size());
    std::sort(nbr.begin(), nbr.end());
    p.signature[v].push_back(nbr.size());
    p.signature[v].insert(p.signature[v].end(), nbr.begin(), nbr.end());
  }
  return p;
}

class Matcher {
 public:
  Matcher(const Hypergraph& h1, const Hypergraph& h2)
      : h1_(h1), h2_(h2), p1_(make_profile(h1)), p2_(make_profile(h2)),
        map_(h1.vertex_count(), kUnmapped), inverse_(h2.vertex_count(), kUnmapped) {
    build_order();
  }

  std::optional<VertexBijection> run() {
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr VertexId kUnmapped = ~VertexId{0};

  void build_order() {
    const std::size_t n = h1_.vertex_count();
    std::vector<std::size_t> rarity(n, 0);
    for (VertexId v = 0; v < n; ++v)
      for (VertexId w = 0; w < n; ++w)
        if (p1_.signature[v] == p1_.signature[w]) ++rarity[v];

    std::vector<bool> placed(n, false);
    std::uint64_t placed_mask = 0;
    for (std::size_t step = 0; step < n; ++step) {
      VertexId best = kUnmapped;
      int best_links = -1;
      for (VertexId v = 0; v < n; ++v) {
        if (placed[v]) continue;
        const int links = std::popcount(p1_.adjacency[v] & placed_mask);
        if (best == kUnmapped || links > best_links ||
            (links == best_links && rarity[v] < rarity[best])) {
          best = v;
          best_links = links;
        }
      }
      placed[best] = true;
      placed_mask |= std::uint64_t{1} << best;
      order_.push_back(best);
    }
  }

  bool consistent(VertexId u, VertexId w) const {
    if (p1_.signature[u] != p2_.signature[w]) return false;
    for (VertexId x = 0; x < map_.size(); ++x) {
      if (map_[x] == kUnmapped) continue;
      const bool a1 = (p1_.adjacency[u] >> x) & 1U;
      const bool a2 = (p2_.adjacency[w] >> map_[x]) & 1U;
      if (a1 != a2) return false;
    }
    return true;
  }

  bool edges_consistent(VertexId u, VertexId w) const {
    Hyperedge image;
    for (std::size_t i : p1_.incident[u]) {
      const auto& e = h1_.edge(i);
      image.clear();
      bool complete = true;
      for (VertexId v : e) {
        if (map_[v] == kUnmapped) {
          complete = false;
          break;
        }
        image.push_back(map_[v]);
      }
      if (!complete) continue;
      std::sort(image.begin(), image.end());
      if (!h2_.contains_edge(image)) return false;
    }
    for (std::size_t i : p2_.incident[w]) {
      const auto& e = h2_.edge(i);
      image.clear();
      bool complete = true;
      for (VertexId v : e) {
        if (inverse_[v] == kUnmapped) {
          complete = false;
          break;
        }
        image.push_back(inverse_[v]);
      }
      if (!complete) continue;
      std::sort(image.begin(), image.end());
      if (!h1_.contains_edge(image)) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return is_isomorphic_under(h1_, h2_, map_);
    const VertexId u = order_[depth];
    for (VertexId w = 0; w < h2_.vertex_count(); ++w) {
      if (inverse_[w] != kUnmapped || !consistent(u, w)) continue;
      map_[u] = w;
      inverse_[w] = u;
      if (edges_consistent(u, w) && search(depth + 1)) return true;
      map_[u] = kUnmapped;
      inverse_[w] = kUnmapped;
    }
    return false;
  }

  const Hypergraph& h1_;
  const Hypergraph& h2_;
  Profile p1_;
  Profile p2_;
  VertexBijection map_;
  VertexBijection inverse_;
  std::vector<VertexId> order_;
};

std::vector<std::size_t> edge_size_profile(const Hypergraph& h) {
  std::vector<std::size_t> sizes;
  for (const auto& e : h.edges()) sizes.push_back(e.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

std::optional<VertexBijection> find_isomorphism(const Hypergraph& h1, const Hypergraph& h2,
                                                const Limits& limits) {
  const std::size_t cap = std::min<std::size_t>(limits.iso_max_vertices, 64);
  if (h1.vertex_count() > cap || h2.vertex_count() > cap) {
    throw CapExceeded("isomorphism search limited to " + std::to_string(cap) + " vertices");
  }
  if (h1.vertex_count() != h2.vertex_count() || h1.edge_count() != h2.edge_count()) return std::nullopt;
  if (edge_size_profile(h1) != edge_size_profile(h2)) return std::nullopt;
  if (h1 == h2) return identity_bijection(h1.vertex_count());
  return Matcher(h1, h2).run();
}

}  // namespace hyperfactor
