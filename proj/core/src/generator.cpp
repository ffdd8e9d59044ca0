#include "hyperfactor/generator.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hyperfactor/cartesian_pfd.hpp"
#include "hyperfactor/errors.hpp"
#include "hyperfactor/oracle.hpp"
#include "hyperfactor/strong_pfd.hpp"

namespace hyperfactor {

namespace {

/// Uniform draw in [0, bound) by rejection. std::uniform_int_distribution is
/// implementation-defined, which would break cross-platform determinism.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
  const std::uint64_t b = bound;
  const std::uint64_t threshold = (0 - b) % b;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) return static_cast<std::size_t>(r % b);
  }
}

/// `count` distinct elements of `pool`, sorted; nullopt if the pool is too small.
std::optional<Hyperedge> sample(std::mt19937_64& rng, std::vector<VertexId> pool, std::size_t count) {
  if (pool.size() < count) return std::nullopt;
  for (std::size_t i = 0; i < count; ++i) std::swap(pool[i], pool[i + draw(rng, pool.size() - i)]);
  Hyperedge e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(count));
  std::sort(e.begin(), e.end());
  return e;
}

class Builder {
 public:
  Builder(const GeneratorSpec& spec, std::mt19937_64& rng) : spec_(spec), rng_(rng), degree_(spec.n, 0) {}

  /// Candidates with spare degree, excluding `skip`.
  std::vector<VertexId> open(const std::vector<bool>& skip) const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < spec_.n; ++v)
      if (!skip[v] && (spec_.degree_max == 0 || degree_[v] < spec_.degree_max)) out.push_back(v);
    return out;
  }

  bool fits(const Hyperedge& e) const {
    for (const auto& f : edges_) {
      if (f == e) return false;
      if (spec_.require_simple && (std::includes(f.begin(), f.end(), e.begin(), e.end()) ||
                                   std::includes(e.begin(), e.end(), f.begin(), f.end()))) {
        return false;
      }
    }
    return true;
  }

  bool add(const Hyperedge& e) {
    if (!fits(e)) return false;
    for (VertexId v : e) ++degree_[v];
    edges_.push_back(e);
    return true;
  }

  std::size_t edge_size() { return 2 + draw(rng_, spec_.rank_max - 1); }

  /// A random edge through `anchor` avoiding `avoid`.
  std::optional<Hyperedge> edge_through(VertexId anchor, std::size_t size, const std::vector<bool>& avoid) {
    std::vector<bool> skip = avoid;
    skip[anchor] = true;
    auto rest = sample(rng_, open(skip), size - 1);
    if (!rest) return std::nullopt;
    rest->push_back(anchor);
    std::sort(rest->begin(), rest->end());
    return rest;
  }

  std::optional<Hypergraph> build() {
    const std::size_t n = spec_.n;
    std::vector<VertexId> order(n);
    for (VertexId v = 0; v < n; ++v) order[v] = v;
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[draw(rng_, i)]);

    // Spanning phase: an edge of full rank, then every further vertex joins
    // through an edge that also meets an already covered vertex.
    if (spec_.rank_max > n) return std::nullopt;
    Hyperedge first(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(spec_.rank_max));
    std::sort(first.begin(), first.end());
    add(first);
    std::vector<bool> covered(n, false);
    for (VertexId v : first) covered[v] = true;
    for (std::size_t i = spec_.rank_max; i < n; ++i) {
      const VertexId v = order[i];
      std::vector<bool> uncovered(n);
      for (VertexId w = 0; w < n; ++w) uncovered[w] = !covered[w];
      bool joined = false;
      for (int tries = 0; tries < 8 && !joined; ++tries) {
        auto e = edge_through(v, std::min(edge_size(), i + 1), uncovered);
        joined = e && add(*e);
      }
      if (!joined) return std::nullopt;
      covered[v] = true;
    }

    const std::size_t extra = draw(rng_, n + 1);
    for (std::size_t k = 0; k < extra; ++k) {
      auto e = sample(rng_, open(std::vector<bool>(n, false)), std::min(edge_size(), n));
      if (e) add(*e);
    }

    // Thin repair: separate a twin pair (x, y) by an edge through x that
    // avoids N[y].
    for (std::size_t round = 0; spec_.require_thin && round < 2 * n; ++round) {
      const Hypergraph current(n, edges_);
      const ThinReport thin = is_thin(current);
      if (thin.thin) break;
      const auto [x, y] = *thin.witness;
      std::vector<bool> avoid(n, false);
      for (VertexId w : closed_neighborhood(current, y)) avoid[w] = true;
      auto e = edge_through(x, 2, avoid);
      if (!e || !add(*e)) return std::nullopt;
    }
    return Hypergraph(n, edges_);
  }

 private:
  const GeneratorSpec& spec_;
  std::mt19937_64& rng_;
  std::vector<std::size_t> degree_;
  std::vector<Hyperedge> edges_;
};

bool is_prime(const Hypergraph& h, ProductKind kind, const Limits& limits) {
  if (h.vertex_count() <= limits.brute_pfd_max_vertices) {
    return oracle::brute_pfd(h, kind, limits).factors.size() == 1;
  }
  if (kind == ProductKind::Cartesian) return hypergraph_cartesian_pfd(h, limits).factors.size() == 1;
  return pfd(h, kind, limits).factors.size() == 1;
}

bool acceptable(const Hypergraph& h, const GeneratorSpec& spec, const Limits& limits) {
  if (h.rank() != spec.rank_max) return false;
  if (spec.degree_max != 0 && h.max_degree() > spec.degree_max) return false;
  if (spec.require_simple && !is_simple(h)) return false;
  if (spec.require_connected && !is_connected(h)) return false;
  if (spec.require_thin && !is_thin(h).thin) return false;
  if (spec.require_prime) {
    try {
      if (!is_prime(h, spec.prime_kind, limits)) return false;
    } catch (const RejectedInput&) {
      return false;
    }
  }
  return true;
}

std::string describe(const GeneratorSpec& spec, std::size_t attempts) {
  std::ostringstream out;
  out << "generated seed=" << spec.seed << " n=" << spec.n << " rank_max=" << spec.rank_max
      << " degree_max=" << spec.degree_max << " require=";
  std::string flags;
  const auto flag = [&](bool on, const char* name) {
    if (!on) return;
    if (!flags.empty()) flags += ',';
    flags += name;
  };
  flag(spec.require_simple, "simple");
  flag(spec.require_connected, "connected");
  flag(spec.require_thin, "thin");
  flag(spec.require_prime, "prime");
  out << (flags.empty() ? "none" : flags);
  if (spec.require_prime) out << " prime_kind=" << to_string(spec.prime_kind);
  out << " attempts=" << attempts;
  return out.str();
}

}  // namespace

GeneratedHypergraph generate(const GeneratorSpec& spec, const Limits& limits) {
  if (spec.n == 0) throw std::invalid_argument("generator needs n >= 1");
  if (spec.rank_max < 2) throw std::invalid_argument("generator needs rank_max >= 2");
  if (spec.n == 1) return {Hypergraph(), 1, describe(spec, 1)};

  std::mt19937_64 rng(spec.seed);
  for (std::size_t attempt = 1; attempt <= limits.gen_attempts; ++attempt) {
    Builder builder(spec, rng);
    auto h = builder.build();
    if (h && acceptable(*h, spec, limits)) return {std::move(*h), attempt, describe(spec, attempt)};
  }
  throw CapExceeded("no hypergraph satisfying the spec after " + std::to_string(limits.gen_attempts) + " attempts");
}

}  // namespace hyperfactor
