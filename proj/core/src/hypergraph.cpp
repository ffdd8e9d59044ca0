#include "hyperfactor/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace hyperfactor {

namespace {

void check_vertex(std::size_t n, VertexId v) {
  if (v >= n) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" +
                            std::to_string(n));
  }
}

bool is_proper_subset(const Hyperedge& a, const Hyperedge& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Hypergraph::Hypergraph(std::size_t n, std::vector<Hyperedge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ == 0) throw std::invalid_argument("hypergraph needs at least one vertex");
  if (n_ > std::numeric_limits<VertexId>::max()) throw std::invalid_argument("too many vertices");
  for (auto& e : edges_) {
    if (e.empty()) throw std::invalid_argument("empty hyperedge");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw std::invalid_argument("hyperedge repeats a vertex");
    }
    if (e.back() >= n_) {
      throw std::invalid_argument("hyperedge vertex " + std::to_string(e.back()) +
                                  " out of range for n=" + std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Hypergraph::contains_edge(std::span<const VertexId> e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e, [](const Hyperedge& a, std::span<const VertexId> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return it != edges_.end() && std::equal(it->begin(), it->end(), e.begin(), e.end());
}

std::size_t Hypergraph::rank() const {
  std::size_t r = 0;
  for (const auto& e : edges_) r = std::max(r, e.size());
  return r;
}

std::size_t Hypergraph::degree(VertexId v) const {
  check_vertex(n_, v);
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [v](const Hyperedge& e) {
    return std::binary_search(e.begin(), e.end(), v);
  }));
}

std::size_t Hypergraph::max_degree() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& e : edges_)
    for (VertexId v : e) ++deg[v];
  return *std::max_element(deg.begin(), deg.end());
}

Graph::Graph(std::size_t n, std::span<const VertexPair> edges) : adjacency_(n) {
  if (n == 0) throw std::invalid_argument("graph needs at least one vertex");
  for (auto [u, v] : edges) {
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    edge_count_ += adj.size();
  }
  edge_count_ /= 2;
}

Graph Graph::from_hypergraph(const Hypergraph& h) {
  std::vector<VertexPair> pairs;
  pairs.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    if (e.size() != 2) throw std::invalid_argument("hyperedge of size " + std::to_string(e.size()) + " is not a graph edge");
    pairs.emplace_back(e[0], e[1]);
  }
  return Graph(h.vertex_count(), pairs);
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<VertexPair> Graph::edge_list() const {
  std::vector<VertexPair> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u)
    for (VertexId v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Hypergraph Graph::to_hypergraph() const {
  std::vector<Hyperedge> edges;
  edges.reserve(edge_count_);
  for (auto [u, v] : edge_list()) edges.push_back({u, v});
  return Hypergraph(vertex_count(), std::move(edges));
}

bool is_simple(const Hypergraph& h) { return validate(h).simple; }

ValidationReport validate(const Hypergraph& h) {
  ValidationReport report;
  const auto edges = h.edges();

  for (const auto& e : edges) {
    if (e.size() < 2) {
      report.simple = false;
      report.undersized_edge = e;
      break;
    }
  }
  for (std::size_t i = 0; i < edges.size() && !report.contained_edges; ++i) {
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (i != j && is_proper_subset(edges[i], edges[j])) {
        report.simple = false;
        report.contained_edges = std::make_pair(edges[i], edges[j]);
        break;
      }
    }
  }

  const auto components = connected_components(h);
  if (components.size() > 1) {
    report.connected = false;
    report.disconnected_pair = VertexPair{components[0].front(), components[1].front()};
  }

  const auto thin = is_thin(h);
  report.thin = thin.thin;
  report.twin_pair = thin.witness;
  return report;
}

std::vector<VertexSet> closed_neighborhoods(const Hypergraph& h) {
  std::vector<VertexSet> nbhd(h.vertex_count());
  for (VertexId v = 0; v < h.vertex_count(); ++v) nbhd[v].push_back(v);
  for (const auto& e : h.edges())
    for (VertexId v : e) nbhd[v].insert(nbhd[v].end(), e.begin(), e.end());
  for (auto& set : nbhd) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
  }
  return nbhd;
}

VertexSet closed_neighborhood(const Hypergraph& h, VertexId v) {
  check_vertex(h.vertex_count(), v);
  VertexSet out{v};
  for (const auto& e : h.edges())
    if (std::binary_search(e.begin(), e.end(), v)) out.insert(out.end(), e.begin(), e.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet closed_neighborhood(const Graph& g, VertexId v) {
  check_vertex(g.vertex_count(), v);
  const auto adj = g.neighbors(v);
  VertexSet out(adj.begin(), adj.end());
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

ThinReport is_thin(const Hypergraph& h) {
  const auto nbhd = closed_neighborhoods(h);
  std::map<VertexSet, VertexId> seen;
  for (VertexId v = 0; v < nbhd.size(); ++v) {
    auto [it, inserted] = seen.emplace(nbhd[v], v);
    if (!inserted) return ThinReport{false, VertexPair{it->second, v}};
  }
  return {};
}

ThinReport is_thin(const Graph& g) { return is_thin(g.to_hypergraph()); }

std::vector<VertexSet> twin_classes(const Hypergraph& h) {
  const auto nbhd = closed_neighborhoods(h);
  std::map<VertexSet, VertexSet> classes;
  for (VertexId v = 0; v < nbhd.size(); ++v) classes[nbhd[v]].push_back(v);
  std::vector<VertexSet> out;
  for (auto& [key, members] : classes)
    if (members.size() > 1) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

Graph two_section(const Hypergraph& h) {
  std::vector<VertexPair> pairs;
  for (const auto& e : h.edges())
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) pairs.emplace_back(e[i], e[j]);
  return Graph(h.vertex_count(), pairs);
}

std::vector<std::size_t> bfs_distances(const Graph& g, VertexId source) {
  check_vertex(g.vertex_count(), source);
  std::vector<std::size_t> dist(g.vertex_count(), std::numeric_limits<std::size_t>::max());
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] == std::numeric_limits<std::size_t>::max()) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(g.vertex_count(), false);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    VertexSet comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (VertexId w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> connected_components(const Hypergraph& h) {
  return connected_components(two_section(h));
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }
bool is_connected(const Hypergraph& h) { return connected_components(h).size() == 1; }

std::optional<std::size_t> distance(const Hypergraph& h, VertexId u, VertexId v) {
  check_vertex(h.vertex_count(), u);
  check_vertex(h.vertex_count(), v);
  const auto dist = bfs_distances(two_section(h), u);
  if (dist[v] == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return dist[v];
}

SubHypergraph induced(const Hypergraph& h, std::span<const VertexId> vertices) {
  if (vertices.empty()) throw std::invalid_argument("induced hypergraph needs a vertex");
  std::vector<std::int64_t> local(h.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(h.vertex_count(), vertices[i]);
    if (i > 0 && vertices[i] <= vertices[i - 1]) throw std::invalid_argument("induced vertex set not ascending");
    local[vertices[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Hyperedge> edges;
  for (const auto& e : h.edges()) {
    Hyperedge mapped;
    mapped.reserve(e.size());
    for (VertexId v : e) {
      if (local[v] < 0) break;
      mapped.push_back(static_cast<VertexId>(local[v]));
    }
    if (mapped.size() == e.size()) edges.push_back(std::move(mapped));
  }
  return {Hypergraph(vertices.size(), std::move(edges)), std::vector<VertexId>(vertices.begin(), vertices.end())};
}

Hypergraph spanning_partial(const Hypergraph& h, const std::vector<bool>& keep) {
  std::vector<Hyperedge> edges;
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    if (keep[i]) edges.push_back(h.edge(i));
  return Hypergraph(h.vertex_count(), std::move(edges));
}

}  // namespace hyperfactor
