#include "hyperfactor/products.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hyperfactor/counting.hpp"
#include "hyperfactor/errors.hpp"

namespace hyperfactor {

std::string_view to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::Cartesian:
      return "cartesian";
    case ProductKind::Normal:
      return "normal";
    case ProductKind::Strong:
      return "strong";
  }
  return "unknown";
}

ProductKind parse_product_kind(std::string_view name) {
  if (name == "cartesian") return ProductKind::Cartesian;
  if (name == "normal") return ProductKind::Normal;
  if (name == "strong") return ProductKind::Strong;
  throw std::invalid_argument("unknown product kind '" + std::string(name) + "'");
}

Coordinates::Coordinates(std::vector<std::size_t> dims, const std::vector<std::vector<std::uint32_t>>& coord)
    : dims_(std::move(dims)), n_(coord.size()) {
  const std::size_t box = std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
  if (coord.size() != box) {
    throw std::invalid_argument("coordinates: " + std::to_string(coord.size()) + " vertices for a box of " +
                                std::to_string(box));
  }
  digits_.reserve(box * dims_.size());
  std::vector<bool> hit(box, false);
  for (const auto& tuple : coord) {
    if (tuple.size() != dims_.size()) throw std::invalid_argument("coordinates: tuple length mismatch");
    std::size_t id = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      if (tuple[i] >= dims_[i]) throw std::invalid_argument("coordinates: digit out of range");
      id = id * dims_[i] + tuple[i];
      digits_.push_back(tuple[i]);
    }
    if (hit[id]) throw std::invalid_argument("coordinates: two vertices share a tuple");
    hit[id] = true;
  }
}

Coordinates Coordinates::row_major(std::vector<std::size_t> dims) {
  const std::size_t box = std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  std::vector<std::vector<std::uint32_t>> coord(box, std::vector<std::uint32_t>(dims.size()));
  for (std::size_t v = 0; v < box; ++v) {
    std::size_t rest = v;
    for (std::size_t i = dims.size(); i-- > 0;) {
      coord[v][i] = static_cast<std::uint32_t>(rest % dims[i]);
      rest /= dims[i];
    }
  }
  return Coordinates(std::move(dims), coord);
}

std::size_t Coordinates::encode(VertexId v, std::span<const std::size_t> factors) const {
  std::size_t id = 0;
  for (std::size_t f : factors) id = id * dims_[f] + at(v, f);
  return id;
}

std::size_t Coordinates::volume(std::span<const std::size_t> factors) const {
  std::size_t out = 1;
  for (std::size_t f : factors) out *= dims_[f];
  return out;
}

std::vector<std::vector<std::uint32_t>> Coordinates::tuples() const {
  std::vector<std::vector<std::uint32_t>> out(n_);
  for (VertexId v = 0; v < n_; ++v) {
    const auto t = of(v);
    out[v].assign(t.begin(), t.end());
  }
  return out;
}

namespace {

/// Calls fn(image) for every injective sequence of length k drawn from [0, m).
void for_each_injection(std::size_t k, std::size_t m, const std::function<void(std::span<const std::size_t>)>& fn) {
  std::vector<std::size_t> image(k);
  std::vector<bool> used(m, false);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == k) {
      fn(image);
      return;
    }
    for (std::size_t t = 0; t < m; ++t) {
      if (used[t]) continue;
      used[t] = true;
      image[pos] = t;
      rec(pos + 1);
      used[t] = false;
    }
  };
  rec(0);
}

/// Calls fn(image) for every surjective map [0, k) -> [0, m).
void for_each_surjection(std::size_t k, std::size_t m, const std::function<void(std::span<const std::size_t>)>& fn) {
  std::vector<std::size_t> image(k);
  std::vector<std::size_t> hits(m, 0);
  std::size_t covered = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (covered + (k - pos) < m) return;
    if (pos == k) {
      fn(image);
      return;
    }
    for (std::size_t t = 0; t < m; ++t) {
      image[pos] = t;
      if (hits[t]++ == 0) ++covered;
      rec(pos + 1);
      if (--hits[t] == 0) --covered;
    }
  };
  rec(0);
}

void require_simple(const Hypergraph& h, const char* which) {
  if (!is_simple(h)) throw NotSimple(std::string(which) + " factor is not simple");
}

}  // namespace

ProductResult product(const Hypergraph& h1, const Hypergraph& h2, ProductKind kind, const Limits& limits) {
  require_simple(h1, "first");
  require_simple(h2, "second");

  const std::size_t n1 = h1.vertex_count();
  const std::size_t n2 = h2.vertex_count();
  if (n1 > limits.product_max_vertices / n2) {
    throw CapExceeded("product would have " + std::to_string(n1) + "*" + std::to_string(n2) +
                      " vertices (cap " + std::to_string(limits.product_max_vertices) + ")");
  }

  BigInt expected = BigInt(h1.edge_count()) * n2 + BigInt(h2.edge_count()) * n1;
  if (kind != ProductKind::Cartesian) expected += count_noncartesian_formula(h1, h2, kind, limits);
  if (expected > limits.product_max_edges) {
    throw CapExceeded("product would have up to " + expected.str() + " edges (cap " +
                      std::to_string(limits.product_max_edges) + ")");
  }

  const auto id = [n2](VertexId x1, VertexId x2) { return static_cast<VertexId>(x1 * n2 + x2); };
  std::vector<Hyperedge> edges;
  edges.reserve(static_cast<std::size_t>(expected));

  for (const auto& e1 : h1.edges()) {
    for (VertexId x2 = 0; x2 < n2; ++x2) {
      Hyperedge e;
      for (VertexId x1 : e1) e.push_back(id(x1, x2));
      edges.push_back(std::move(e));
    }
  }
  for (VertexId x1 = 0; x1 < n1; ++x1) {
    for (const auto& e2 : h2.edges()) {
      Hyperedge e;
      for (VertexId x2 : e2) e.push_back(id(x1, x2));
      edges.push_back(std::move(e));
    }
  }

  if (kind != ProductKind::Cartesian) {
    for (const auto& e1 : h1.edges()) {
      for (const auto& e2 : h2.edges()) {
        const std::size_t a = e1.size();
        const std::size_t b = e2.size();
        // The graph of a map always has one vertex per element of its domain.
        // Equal sizes: forward bijections already cover the inverse ones.
        const bool domain_is_first = kind == ProductKind::Normal ? a <= b : a >= b;
        const std::size_t k = domain_is_first ? a : b;
        const std::size_t m = domain_is_first ? b : a;
        auto emit = [&](std::span<const std::size_t> image) {
          Hyperedge e;
          e.reserve(k);
          for (std::size_t i = 0; i < k; ++i) {
            e.push_back(domain_is_first ? id(e1[i], e2[image[i]]) : id(e1[image[i]], e2[i]));
          }
          edges.push_back(std::move(e));
        };
        if (kind == ProductKind::Normal) {
          for_each_injection(k, m, emit);
        } else {
          for_each_surjection(k, m, emit);
        }
      }
    }
  }

  return {Hypergraph(n1 * n2, std::move(edges)), Coordinates::row_major({n1, n2})};
}

ProductResult product_all(std::span<const Hypergraph> factors, ProductKind kind, const Limits& limits) {
  if (factors.empty()) return {Hypergraph(), Coordinates()};
  Hypergraph acc = factors.front();
  std::vector<std::size_t> dims{factors.front().vertex_count()};
  for (std::size_t i = 1; i < factors.size(); ++i) {
    acc = product(acc, factors[i], kind, limits).hypergraph;
    dims.push_back(factors[i].vertex_count());
  }
  return {std::move(acc), Coordinates::row_major(std::move(dims))};
}

std::size_t projection_size(std::span<const VertexId> e, const Coordinates& c, std::span<const std::size_t> factors) {
  std::vector<std::size_t> keys;
  keys.reserve(e.size());
  for (VertexId v : e) keys.push_back(c.encode(v, factors));
  std::sort(keys.begin(), keys.end());
  return static_cast<std::size_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

std::vector<EdgeLabel> classify_edges(const Hypergraph& h, const Coordinates& c) {
  if (c.vertex_count() != h.vertex_count()) {
    throw std::invalid_argument("coordinates cover " + std::to_string(c.vertex_count()) + " vertices, hypergraph has " +
                                std::to_string(h.vertex_count()));
  }
  std::vector<EdgeLabel> labels;
  labels.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    std::optional<std::size_t> varying;
    bool several = false;
    for (std::size_t i = 0; i < c.factor_count() && !several; ++i) {
      const auto first = c.at(e.front(), i);
      const bool varies = std::any_of(e.begin(), e.end(), [&](VertexId v) { return c.at(v, i) != first; });
      if (!varies) continue;
      if (varying) several = true;
      varying = i;
    }
    EdgeLabel label;
    if (varying && !several) {
      const std::size_t k = *varying;
      const std::size_t only[] = {k};
      if (projection_size(e, c, only) == e.size()) label.color = k;
    }
    labels.push_back(label);
  }
  return labels;
}

SubHypergraph layer(const Hypergraph& h, const Coordinates& c, std::size_t j, VertexId w) {
  if (c.vertex_count() != h.vertex_count()) throw std::invalid_argument("coordinates do not match hypergraph");
  if (j >= c.factor_count()) throw std::out_of_range("layer: factor index out of range");
  if (w >= h.vertex_count()) throw std::out_of_range("layer: vertex out of range");
  VertexSet members;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    bool same = true;
    for (std::size_t k = 0; k < c.factor_count() && same; ++k)
      if (k != j && c.at(v, k) != c.at(w, k)) same = false;
    if (same) members.push_back(v);
  }
  return induced(h, members);
}

}  // namespace hyperfactor
