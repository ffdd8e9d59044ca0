#include "hyperfactor/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "hyperfactor/errors.hpp"

namespace hyperfactor::oracle {

namespace {

using EdgeSet = std::set<Hyperedge>;

void cap(std::size_t value, std::size_t limit, const char* what) {
  if (value > limit) {
    throw CapExceeded(std::string(what) + ": " + std::to_string(value) + " exceeds cap " + std::to_string(limit));
  }
}

EdgeSet edge_set(const Hypergraph& h) { return EdgeSet(h.edges().begin(), h.edges().end()); }

Hypergraph from_set(std::size_t n, const EdgeSet& edges) {
  return Hypergraph(n, std::vector<Hyperedge>(edges.begin(), edges.end()));
}

/// Sub-hypergraph on `verts`, vertex verts[i] becoming i. Keeps the edges
/// lying entirely inside `verts`.
Hypergraph induced_on(const Hypergraph& h, const std::vector<VertexId>& verts) {
  std::vector<long> local(h.vertex_count(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<long>(i);
  EdgeSet edges;
  for (const auto& e : h.edges()) {
    Hyperedge mapped;
    bool inside = true;
    for (VertexId v : e) {
      if (local[v] < 0) {
        inside = false;
        break;
      }
      mapped.push_back(static_cast<VertexId>(local[v]));
    }
    if (!inside) continue;
    std::sort(mapped.begin(), mapped.end());
    edges.insert(mapped);
  }
  return from_set(verts.size(), edges);
}

EdgeSet mapped_edges(const Hypergraph& h, const std::vector<VertexId>& map) {
  EdgeSet out;
  for (const auto& e : h.edges()) {
    Hyperedge m;
    for (VertexId v : e) m.push_back(map[v]);
    std::sort(m.begin(), m.end());
    out.insert(m);
  }
  return out;
}

bool connected(const Hypergraph& h) {
  std::vector<bool> seen(h.vertex_count(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (const auto& e : h.edges()) {
      if (!std::binary_search(e.begin(), e.end(), x)) continue;
      for (VertexId y : e) {
        if (seen[y]) continue;
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == h.vertex_count();
}

std::optional<BruteSplit> find_split(const Hypergraph& h, ProductKind kind, const Limits& limits) {
  const std::size_t n = h.vertex_count();
  const bool h_connected = connected(h);

  for (std::size_t n1 = 2; n1 * 2 <= n; ++n1) {
    if (n % n1 != 0) continue;
    const std::size_t n2 = n / n1;

    // blocks[b] lists the vertices of the b-th copy of the second factor,
    // position p of block b corresponding to position p of block 0.
    std::vector<std::vector<VertexId>> blocks;
    std::vector<bool> used(n, false);
    Hypergraph base;
    EdgeSet base_edges;
    std::optional<BruteSplit> found;

    std::function<void()> next_block;

    const auto finish = [&] {
      std::vector<VertexId> bijection(n);
      for (std::size_t b = 0; b < n1; ++b)
        for (std::size_t p = 0; p < n2; ++p) bijection[blocks[b][p]] = static_cast<VertexId>(b * n2 + p);
      std::vector<VertexId> column;
      for (std::size_t b = 0; b < n1; ++b) column.push_back(blocks[b][0]);
      const Hypergraph first = induced_on(h, column);
      if (h_connected && !connected(first)) return;
      if (edge_set(brute_product(first, base, kind, limits)) == mapped_edges(h, bijection)) {
        found = BruteSplit{first, base, bijection};
      }
    };

    // Tries every order of `members` that makes the block a copy of block 0.
    const auto place_block = [&](std::vector<VertexId> members) {
      std::sort(members.begin(), members.end());
      do {
        if (found) return;
        if (edge_set(induced_on(h, members)) != base_edges) continue;
        blocks.push_back(members);
        next_block();
        blocks.pop_back();
      } while (std::next_permutation(members.begin(), members.end()));
    };

    next_block = [&] {
      if (found) return;
      if (blocks.size() == n1) {
        finish();
        return;
      }
      VertexId start = 0;
      while (used[start]) ++start;
      std::vector<VertexId> rest;
      for (VertexId v = start + 1; v < n; ++v)
        if (!used[v]) rest.push_back(v);

      // Choose n2 - 1 companions for `start` among the unused vertices.
      std::vector<std::size_t> pick(n2 - 1);
      std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t depth, std::size_t from) {
        if (found) return;
        if (depth == pick.size()) {
          std::vector<VertexId> members{start};
          for (std::size_t i : pick) members.push_back(rest[i]);
          for (VertexId v : members) used[v] = true;
          if (blocks.empty()) {
            base = induced_on(h, members);
            base_edges = edge_set(base);
            if (!h_connected || connected(base)) {
              blocks.push_back(members);
              next_block();
              blocks.pop_back();
            }
          } else {
            place_block(members);
          }
          for (VertexId v : members) used[v] = false;
          return;
        }
        for (std::size_t i = from; i + (pick.size() - depth) <= rest.size(); ++i) {
          pick[depth] = i;
          choose(depth + 1, i + 1);
        }
      };
      choose(0, 0);
    };

    next_block();
    if (found) return found;
  }
  return std::nullopt;
}

bool strict_subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  bool smaller = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
    if (b[i] && !a[i]) smaller = true;
  }
  return smaller;
}

std::vector<bool> meet(const std::vector<bool>& a, const std::vector<bool>& b) {
  std::vector<bool> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

}  // namespace

Hypergraph brute_product(const Hypergraph& h1, const Hypergraph& h2, ProductKind kind, const Limits& limits) {
  const std::size_t n1 = h1.vertex_count();
  const std::size_t n2 = h2.vertex_count();
  cap(n1 * n2, limits.product_max_vertices, "brute product vertices");
  const auto id = [n2](VertexId x1, VertexId x2) { return static_cast<VertexId>(x1 * n2 + x2); };
  const EdgeSet e1s = edge_set(h1);
  const EdgeSet e2s = edge_set(h2);
  EdgeSet out;

  // Condition (i): one projection is an edge, the other a single vertex.
  for (const auto& e1 : h1.edges()) {
    for (VertexId y = 0; y < n2; ++y) {
      Hyperedge e;
      for (VertexId x : e1) e.push_back(id(x, y));
      out.insert(e);
    }
  }
  for (VertexId x = 0; x < n1; ++x) {
    for (const auto& e2 : h2.edges()) {
      Hyperedge e;
      for (VertexId y : e2) e.push_back(id(x, y));
      out.insert(e);
    }
  }
  if (kind == ProductKind::Cartesian) return from_set(n1 * n2, out);

  // Condition (ii): scan every subset of e1 x e2.
  for (const auto& e1 : h1.edges()) {
    for (const auto& e2 : h2.edges()) {
      cap(e1.size() * e2.size(), 16, "brute product edge pair |e1|*|e2|");
      std::vector<std::pair<VertexId, VertexId>> cells;
      for (VertexId x : e1)
        for (VertexId y : e2) cells.emplace_back(x, y);
      for (std::uint32_t mask = 1; mask < (1u << cells.size()); ++mask) {
        std::set<VertexId> p1;
        std::set<VertexId> p2;
        Hyperedge e;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (!(mask & (1u << i))) continue;
          p1.insert(cells[i].first);
          p2.insert(cells[i].second);
          e.push_back(id(cells[i].first, cells[i].second));
        }
        bool ok = false;
        if (kind == ProductKind::Strong) {
          const Hyperedge q1(p1.begin(), p1.end());
          const Hyperedge q2(p2.begin(), p2.end());
          ok = e1s.count(q1) && e2s.count(q2) && e.size() == std::max(p1.size(), p2.size());
        } else {
          ok = e.size() == p1.size() && e.size() == p2.size() && e.size() == std::min(e1.size(), e2.size());
        }
        if (ok) {
          std::sort(e.begin(), e.end());
          out.insert(e);
        }
      }
    }
  }
  return from_set(n1 * n2, out);
}

BruteFactorization brute_pfd(const Hypergraph& h, ProductKind kind, const Limits& limits) {
  cap(h.vertex_count(), limits.brute_pfd_max_vertices, "brute_pfd vertices");
  BruteFactorization out;
  if (h.vertex_count() == 1) return out;
  auto split = find_split(h, kind, limits);
  if (!split) {
    out.factors.push_back(h);
    return out;
  }
  out.splits.push_back(*split);
  for (const Hypergraph* part : {&split->first, &split->second}) {
    auto sub = brute_pfd(*part, kind, limits);
    out.splits.insert(out.splits.end(), sub.splits.begin(), sub.splits.end());
    out.factors.insert(out.factors.end(), sub.factors.begin(), sub.factors.end());
  }
  return out;
}

std::size_t brute_count_maps(std::size_t a, std::size_t b, ProductKind kind, const Limits& limits) {
  cap(a, limits.brute_maps_max, "brute_count_maps domain");
  cap(b, limits.brute_maps_max, "brute_count_maps codomain");
  if (kind == ProductKind::Cartesian) throw std::invalid_argument("brute_count_maps needs normal or strong");
  std::vector<std::size_t> image(a, 0);
  std::size_t count = 0;
  if (b == 0) return a == 0 ? 1 : 0;
  while (true) {
    std::vector<std::size_t> hits(b, 0);
    for (std::size_t t : image) ++hits[t];
    const bool injective = std::all_of(hits.begin(), hits.end(), [](std::size_t c) { return c <= 1; });
    const bool surjective = std::all_of(hits.begin(), hits.end(), [](std::size_t c) { return c >= 1; });
    if (kind == ProductKind::Normal ? injective : surjective) ++count;
    std::size_t pos = 0;
    while (pos < a && ++image[pos] == b) image[pos++] = 0;
    if (pos == a) break;
  }
  return count;
}

std::vector<Hyperedge> brute_dispensable(const Hypergraph& h, const Limits& limits) {
  const std::size_t n = h.vertex_count();
  cap(n, limits.brute_dispensable_max_vertices, "brute_dispensable vertices");
  std::vector<std::vector<bool>> nb(n, std::vector<bool>(n, false));
  for (VertexId v = 0; v < n; ++v) nb[v][v] = true;
  for (const auto& e : h.edges())
    for (VertexId x : e)
      for (VertexId y : e) nb[x][y] = true;

  const auto holds = [&](VertexId x, VertexId y, VertexId z) {
    const auto xy = meet(nb[x], nb[y]);
    const bool first = strict_subset(xy, meet(nb[x], nb[z])) || (strict_subset(nb[x], nb[z]) && strict_subset(nb[z], nb[y]));
    const bool second = strict_subset(xy, meet(nb[y], nb[z])) || (strict_subset(nb[y], nb[z]) && strict_subset(nb[z], nb[x]));
    return first && second;
  };

  std::vector<Hyperedge> out;
  for (const auto& e : h.edges()) {
    bool dispensable = false;
    for (VertexId x : e)
      for (VertexId y : e)
        for (VertexId z = 0; z < n && !dispensable && x != y; ++z) dispensable = holds(x, y, z);
    if (dispensable) out.push_back(e);
  }
  return out;
}

std::optional<std::size_t> brute_distance(const Hypergraph& h, VertexId u, VertexId v, const Limits& limits) {
  const std::size_t n = h.vertex_count();
  cap(n, limits.brute_distance_max_vertices, "brute_distance vertices");
  if (u >= n || v >= n) throw std::out_of_range("brute_distance: vertex out of range");
  if (u == v) return 0;
  std::optional<std::size_t> best;
  std::vector<bool> vertex_used(n, false);
  std::vector<bool> edge_used(h.edge_count(), false);
  std::function<void(VertexId, std::size_t)> walk = [&](VertexId at, std::size_t length) {
    if (at == v) {
      if (!best || length < *best) best = length;
      return;
    }
    if (best && length + 1 >= *best) return;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      const auto& e = h.edge(i);
      if (edge_used[i] || !std::binary_search(e.begin(), e.end(), at)) continue;
      edge_used[i] = true;
      for (VertexId w : e) {
        if (vertex_used[w]) continue;
        vertex_used[w] = true;
        walk(w, length + 1);
        vertex_used[w] = false;
      }
      edge_used[i] = false;
    }
  };
  vertex_used[u] = true;
  walk(u, 0);
  return best;
}

bool brute_isomorphic(const Hypergraph& a, const Hypergraph& b, const Limits& limits) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (a == b) return true;
  const auto profile = [](const Hypergraph& h) {
    std::vector<std::size_t> degrees, sizes;
    for (VertexId v = 0; v < h.vertex_count(); ++v) degrees.push_back(h.degree(v));
    for (const auto& e : h.edges()) sizes.push_back(e.size());
    std::sort(degrees.begin(), degrees.end());
    std::sort(sizes.begin(), sizes.end());
    return std::pair(degrees, sizes);
  };
  if (profile(a) != profile(b)) return false;
  cap(a.vertex_count(), limits.brute_iso_max_vertices, "brute_isomorphic vertices");
  const EdgeSet target = edge_set(b);
  std::vector<VertexId> perm(a.vertex_count());
  for (VertexId i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    if (mapped_edges(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool same_factors(const std::vector<Hypergraph>& a, const std::vector<Hypergraph>& b, const Limits& limits) {
  if (a.size() != b.size()) return false;
  std::vector<bool> taken(b.size(), false);
  for (const auto& x : a) {
    bool matched = false;
    for (std::size_t j = 0; j < b.size() && !matched; ++j) {
      if (taken[j] || !brute_isomorphic(x, b[j], limits)) continue;
      taken[j] = true;
      matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace hyperfactor::oracle
