#include "hyperfactor/io.hpp"

#include <charconv>
#include <limits>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hyperfactor/errors.hpp"

namespace hyperfactor {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

std::uint64_t parse_uint(std::string_view word, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     std::string(word) + "'");
  }
  return value;
}

Hypergraph build(std::uint64_t n, std::vector<Hyperedge> edges) {
  if (n == 0) throw ParseError("vertex count must be positive");
  if (n > std::numeric_limits<VertexId>::max()) throw ParseError("vertex count too large");
  std::set<Hyperedge> seen;
  for (const auto& e : edges) {
    if (e.empty()) throw ParseError("empty hyperedge");
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] >= n) throw ParseError("vertex " + std::to_string(e[i]) + " out of range");
      if (i > 0 && e[i] <= e[i - 1]) throw ParseError("hyperedge vertices must be strictly ascending");
    }
    if (!seen.insert(e).second) throw ParseError("duplicate hyperedge");
  }
  return Hypergraph(static_cast<std::size_t>(n), std::move(edges));
}

}  // namespace

Hypergraph parse_text(std::string_view text) {
  std::optional<std::uint64_t> n;
  std::uint64_t m = 0;
  std::vector<Hyperedge> edges;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    const auto words = split_words(line);
    if (words.empty()) continue;

    if (!n) {
      if (words.size() != 3 || words[0] != "hypergraph") {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'hypergraph <n> <m>'");
      }
      n = parse_uint(words[1], line_no);
      m = parse_uint(words[2], line_no);
      continue;
    }
    if (words[0] != "e") throw ParseError("line " + std::to_string(line_no) + ": expected 'e <v1> ...'");
    if (edges.size() == m) throw ParseError("line " + std::to_string(line_no) + ": more edges than declared");
    Hyperedge e;
    for (std::size_t i = 1; i < words.size(); ++i) {
      const auto v = parse_uint(words[i], line_no);
      if (v > std::numeric_limits<VertexId>::max()) throw ParseError("vertex id too large");
      e.push_back(static_cast<VertexId>(v));
    }
    edges.push_back(std::move(e));
  }
  if (!n) throw ParseError("missing 'hypergraph <n> <m>' header");
  if (edges.size() != m) {
    throw ParseError("declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return build(*n, std::move(edges));
}

Hypergraph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw ParseError("JSON hypergraph needs 'n' and 'edges'");
  }
  if (!doc["n"].is_number_unsigned()) throw ParseError("'n' must be a non-negative integer");
  if (!doc["edges"].is_array()) throw ParseError("'edges' must be an array");
  std::vector<Hyperedge> edges;
  for (const auto& item : doc["edges"]) {
    if (!item.is_array()) throw ParseError("each edge must be an array");
    Hyperedge e;
    for (const auto& v : item) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() > std::numeric_limits<VertexId>::max()) {
        throw ParseError("vertex ids must be non-negative integers");
      }
      e.push_back(v.get<VertexId>());
    }
    edges.push_back(std::move(e));
  }
  return build(doc["n"].get<std::uint64_t>(), std::move(edges));
}

Hypergraph parse_any(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

std::string to_text(const Hypergraph& h, std::string_view comment) {
  std::ostringstream out;
  while (!comment.empty()) {
    const auto nl = comment.find('\n');
    out << "# " << comment.substr(0, nl) << '\n';
    comment = nl == std::string_view::npos ? std::string_view{} : comment.substr(nl + 1);
  }
  out << "hypergraph " << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.edges()) {
    out << 'e';
    for (VertexId v : e) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::string to_json_text(const Hypergraph& h) {
  nlohmann::ordered_json doc;
  doc["n"] = h.vertex_count();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : h.edges()) doc["edges"].push_back(e);
  return doc.dump() + "\n";
}

std::string write(const Hypergraph& h, Format format, std::string_view comment) {
  return format == Format::Json ? to_json_text(h) : to_text(h, comment);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Hypergraph load(const std::filesystem::path& path) { return parse_any(read_file(path)); }

void save(const std::filesystem::path& path, const Hypergraph& h, Format format, std::string_view comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << write(h, format, comment);
}

}  // namespace hyperfactor
