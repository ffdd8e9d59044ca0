#include "render.hpp"

#include <sstream>

namespace hyperfactor::cli {

namespace {

std::string edge_text(const Hyperedge& e) {
  std::string out = "{";
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
  return out + "}";
}

}  // namespace

Json to_json(const Hypergraph& h) {
  Json doc;
  doc["n"] = h.vertex_count();
  doc["edges"] = Json::array();
  for (const auto& e : h.edges()) doc["edges"].push_back(e);
  return doc;
}

Json to_json(const Coordinates& c) {
  Json doc;
  doc["dims"] = c.dims();
  doc["tuples"] = Json::array();
  for (const auto& t : c.tuples()) doc["tuples"].push_back(t);
  return doc;
}

Json to_json(const ValidationReport& r) {
  Json doc;
  doc["simple"] = r.simple;
  doc["connected"] = r.connected;
  doc["thin"] = r.thin;
  Json w = Json::object();
  if (r.undersized_edge) w["undersized_edge"] = *r.undersized_edge;
  if (r.contained_edges) w["contained_edges"] = {r.contained_edges->first, r.contained_edges->second};
  if (r.disconnected_pair) w["disconnected_pair"] = {r.disconnected_pair->first, r.disconnected_pair->second};
  if (r.twin_pair) w["twin_pair"] = {r.twin_pair->first, r.twin_pair->second};
  doc["witnesses"] = w;
  return doc;
}

Json to_json(const CompletenessVerdict& v) {
  Json doc;
  doc["exact"] = v.exact;
  doc["counting"] = v.counting;
  doc["formula"] = v.formula_value.str();
  doc["valid_noncartesian"] = v.valid_noncartesian;
  doc["invalid_noncartesian"] = v.invalid_noncartesian;
  doc["linear_factors"] = v.linear_factors;
  return doc;
}

std::string dump(const Json& doc) { return doc.dump() + "\n"; }

std::string coordinates_text(const Coordinates& c) {
  std::ostringstream out;
  out << "coordinates " << c.vertex_count() << ' ' << c.factor_count() << "\ndims";
  for (std::size_t d : c.dims()) out << ' ' << d;
  out << '\n';
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    out << "v " << v;
    for (std::uint32_t x : c.of(v)) out << ' ' << x;
    out << '\n';
  }
  return out.str();
}

std::string validation_text(const ValidationReport& r) {
  std::ostringstream out;
  out << "simple " << (r.simple ? "yes" : "no");
  if (r.undersized_edge) out << " (edge " << edge_text(*r.undersized_edge) << " has fewer than 2 vertices)";
  if (r.contained_edges) {
    out << " (edge " << edge_text(r.contained_edges->first) << " inside " << edge_text(r.contained_edges->second)
        << ")";
  }
  out << "\nconnected " << (r.connected ? "yes" : "no");
  if (r.disconnected_pair) {
    out << " (no path between " << r.disconnected_pair->first << " and " << r.disconnected_pair->second << ")";
  }
  out << "\nthin " << (r.thin ? "yes" : "no");
  if (r.twin_pair) out << " (N[" << r.twin_pair->first << "] = N[" << r.twin_pair->second << "])";
  out << '\n';
  return out.str();
}

Hypergraph removed_as_hypergraph(const Hypergraph& h, const SkeletonResult& s) {
  return Hypergraph(h.vertex_count(), s.removed.hyperedges);
}

}  // namespace hyperfactor::cli
