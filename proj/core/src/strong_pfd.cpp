#include "hyperfactor/strong_pfd.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "detail/factor_split.hpp"
#include "hyperfactor/cartesian_pfd.hpp"
#include "hyperfactor/errors.hpp"
#include "hyperfactor/skeleton.hpp"

namespace hyperfactor {

namespace {

IndexSet checked_index_set(std::span<const std::size_t> factors, std::size_t count) {
  IndexSet out(factors.begin(), factors.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw std::invalid_argument("repeated factor index");
  if (!out.empty() && out.back() >= count) throw std::invalid_argument("factor index out of range");
  return out;
}

std::vector<std::size_t> sorted_keys(std::span<const VertexId> e, const Coordinates& c,
                                     std::span<const std::size_t> factors) {
  std::vector<std::size_t> keys;
  for (VertexId v : e) keys.push_back(c.encode(v, factors));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

bool has_superset(const Hypergraph& h, const Hyperedge& subset) {
  return std::any_of(h.edges().begin(), h.edges().end(), [&](const Hyperedge& e) {
    return std::includes(e.begin(), e.end(), subset.begin(), subset.end());
  });
}

std::string describe_twins(const Hypergraph& h) {
  std::ostringstream out;
  out << "hypergraph is not thin; prime factorization of non-thin hypergraphs is an open problem."
      << " Twin classes:";
  for (const auto& cls : twin_classes(h)) {
    out << " {";
    for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? "," : "") << cls[i];
    out << "}";
  }
  return out.str();
}

}  // namespace

LayerHypergraph layer_hypergraph(const Hypergraph& h, const Coordinates& c, std::span<const std::size_t> factors) {
  if (c.vertex_count() != h.vertex_count()) throw std::invalid_argument("coordinates do not match hypergraph");
  LayerHypergraph out{checked_index_set(factors, c.factor_count()), Hypergraph(), c};
  const IndexSet others = detail::complement(c.factor_count(), out.factors);
  std::vector<bool> keep(h.edge_count(), false);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const auto& e = h.edge(i);
    keep[i] = std::all_of(others.begin(), others.end(), [&](std::size_t k) {
      return std::all_of(e.begin(), e.end(), [&](VertexId v) { return c.at(v, k) == c.at(e.front(), k); });
    });
  }
  out.hypergraph = spanning_partial(h, keep);
  return out;
}

std::optional<Hypergraph> components_all_isomorphic(const LayerHypergraph& layer, const Limits& limits) {
  const Hypergraph& h = layer.hypergraph;
  const Coordinates& c = layer.coords;
  const auto components = connected_components(h);
  if (std::all_of(components.begin(), components.end(), [](const VertexSet& s) { return s.size() == 1; })) {
    return std::nullopt;
  }

  // Sub-tuple labelling when the component is a full layer, dense otherwise.
  const std::size_t volume = c.volume(layer.factors);
  const auto canonical = [&](const VertexSet& members) {
    const SubHypergraph sub = induced(h, members);
    if (members.size() != volume) return sub.hypergraph;
    VertexBijection map(members.size());
    std::vector<bool> hit(volume, false);
    for (std::size_t i = 0; i < members.size(); ++i) {
      const std::size_t key = c.encode(members[i], layer.factors);
      if (hit[key]) return sub.hypergraph;
      hit[key] = true;
      map[i] = static_cast<VertexId>(key);
    }
    return relabel(sub.hypergraph, map);
  };

  const Hypergraph representative = canonical(components.front());
  for (std::size_t i = 1; i < components.size(); ++i) {
    const Hypergraph other = canonical(components[i]);
    if (other.vertex_count() != representative.vertex_count() || other.edge_count() != representative.edge_count()) {
      return std::nullopt;
    }
    if (other == representative) continue;  // the coordinate-induced bijection works
    if (!find_isomorphism(other, representative, limits)) return std::nullopt;
  }
  return representative;
}

CompletenessVerdict noncartesian_complete(const Hypergraph& h, const Coordinates& c, std::span<const std::size_t> subset,
                                          const Hypergraph& h_s, const Hypergraph& h_co, ProductKind kind,
                                          const Limits& limits) {
  if (kind == ProductKind::Cartesian) throw std::invalid_argument("completeness is defined for normal/strong products");
  const IndexSet s = checked_index_set(subset, c.factor_count());
  const IndexSet rest = detail::complement(c.factor_count(), s);
  if (h_s.vertex_count() != c.volume(s) || h_co.vertex_count() != c.volume(rest)) {
    throw std::invalid_argument("candidate factors do not match the coordinate box");
  }

  CompletenessVerdict verdict;
  verdict.linear_factors = edges_pairwise_linear(h_s) && edges_pairwise_linear(h_co);

  const auto map = detail::split_bijection(c, s, rest);
  verdict.exact = relabel(h, map) == product(h_s, h_co, kind, limits).hypergraph;

  // Counting criterion: validate every edge that varies in both parts.
  for (const auto& e : h.edges()) {
    const auto p1 = sorted_keys(e, c, s);
    const auto p2 = sorted_keys(e, c, rest);
    if (p1.size() == 1 || p2.size() == 1) continue;
    const Hyperedge e1(p1.begin(), p1.end());
    const Hyperedge e2(p2.begin(), p2.end());
    bool valid = false;
    if (kind == ProductKind::Strong) {
      valid = h_s.contains_edge(e1) && h_co.contains_edge(e2) && e.size() == std::max(e1.size(), e2.size());
    } else {
      valid = e.size() == e1.size() && e.size() == e2.size() &&
              ((h_s.contains_edge(e1) && has_superset(h_co, e2)) || (h_co.contains_edge(e2) && has_superset(h_s, e1)));
    }
    ++(valid ? verdict.valid_noncartesian : verdict.invalid_noncartesian);
  }
  verdict.formula_value = count_noncartesian_formula(h_s, h_co, kind, limits);
  verdict.counting = verdict.invalid_noncartesian == 0 && BigInt(verdict.valid_noncartesian) == verdict.formula_value;
  return verdict;
}

PrimeFactorReport pfd(const Hypergraph& h, ProductKind kind, const Limits& limits) {
  if (kind == ProductKind::Cartesian) {
    throw std::invalid_argument("use hypergraph_cartesian_pfd for the Cartesian product");
  }
  const auto report = validate(h);
  if (!report.simple) throw NotSimple("hypergraph is not simple");
  if (!report.connected) throw NotConnected("hypergraph is not connected");
  if (!report.thin) throw NotThin(describe_twins(h));

  PrimeFactorReport out;
  out.kind = kind;
  if (h.vertex_count() == 1) {
    out.certificate = true;
    return out;
  }

  const SkeletonResult skel = cartesian_skeleton(h);
  out.removed_edges = skel.removed.hyperedges.size();
  Hypergraph scaffold = skel.skeleton;
  if (!is_connected(scaffold)) {
    // Dropping whole hyperedges can disconnect the skeleton even for thin H.
    // The graph skeleton of the 2-section stays connected and its Cartesian
    // factors refine every factorization of [H]_2, hence of H.
    scaffold = cartesian_skeleton(two_section(h).to_hypergraph()).skeleton;
    out.two_section_skeleton = true;
  }

  const HypergraphFactorization cart = hypergraph_cartesian_pfd(scaffold, limits);
  out.skeleton_factors = cart.factors;
  out.skeleton_coords = cart.coords;
  const Coordinates& c = cart.coords;
  const std::size_t count = c.factor_count();

  const auto splits = [&](std::span<const std::size_t> subset) {
    SplitAttempt attempt;
    attempt.subset.assign(subset.begin(), subset.end());
    const IndexSet rest = detail::complement(count, subset);
    const auto rep_s = components_all_isomorphic(layer_hypergraph(h, c, subset), limits);
    const auto rep_co = rep_s ? components_all_isomorphic(layer_hypergraph(h, c, rest), limits) : std::nullopt;
    attempt.components_isomorphic = rep_s && rep_co && rep_s->vertex_count() == c.volume(subset) &&
                                    rep_co->vertex_count() == c.volume(rest);
    if (attempt.components_isomorphic) {
      attempt.verdict = noncartesian_complete(h, c, subset, *rep_s, *rep_co, kind, limits);
      attempt.accepted = attempt.verdict->exact;
    }
    out.attempts.push_back(attempt);
    return attempt.accepted;
  };
  out.index_partition = detail::minimal_split_groups(count, splits);

  if (out.index_partition.size() == 1) {
    out.factors.push_back(h);
    out.coords = Coordinates({h.vertex_count()}, [&] {
      std::vector<std::vector<std::uint32_t>> t(h.vertex_count());
      for (VertexId v = 0; v < h.vertex_count(); ++v) t[v] = {v};
      return t;
    }());
  } else {
    for (const auto& group : out.index_partition) out.factors.push_back(detail::factor_projection(h, c, group));
    out.coords = detail::group_coordinates(c, out.index_partition);
  }

  std::vector<std::size_t> all(out.coords.factor_count());
  std::iota(all.begin(), all.end(), std::size_t{0});
  VertexBijection map(h.vertex_count());
  for (VertexId v = 0; v < h.vertex_count(); ++v) map[v] = static_cast<VertexId>(out.coords.encode(v, all));
  out.certificate = relabel(h, map) == product_all(out.factors, kind, limits).hypergraph;
  if (!out.certificate) throw InternalError("prime factors do not reconstruct the input");
  return out;
}

}  // namespace hyperfactor
