#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperfactor/cartesian_pfd.hpp"
#include "hyperfactor/counting.hpp"
#include "hyperfactor/errors.hpp"
#include "hyperfactor/generator.hpp"
#include "hyperfactor/io.hpp"
#include "hyperfactor/isomorphism.hpp"
#include "hyperfactor/oracle.hpp"
#include "hyperfactor/products.hpp"
#include "hyperfactor/skeleton.hpp"
#include "hyperfactor/strong_pfd.hpp"
#include "render.hpp"

namespace hf = hyperfactor;
using hyperfactor::cli::Json;

namespace {

enum Exit : int { kOk = 0, kRejected = 1, kParse = 2, kCap = 3, kInternal = 4 };

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hf::ParseError("cannot open '" + path + "' for writing");
  out << text;
}

std::vector<std::size_t> all_indices(std::size_t k) {
  std::vector<std::size_t> out(k);
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

std::vector<hf::VertexId> encoding_map(const hf::Coordinates& c) {
  const auto all = all_indices(c.factor_count());
  std::vector<hf::VertexId> map(c.vertex_count());
  for (hf::VertexId v = 0; v < c.vertex_count(); ++v) map[v] = static_cast<hf::VertexId>(c.encode(v, all));
  return map;
}

std::string distance_text(std::optional<std::size_t> d) { return d ? std::to_string(*d) : std::string("inf"); }

Json distance_json(hf::VertexId u, hf::VertexId v, std::optional<std::size_t> d) {
  Json doc;
  doc["u"] = u;
  doc["v"] = v;
  doc["distance"] = d ? Json(*d) : Json(nullptr);
  return doc;
}

/// Text listing of factors, one hypergraph block per factor.
std::string factors_text(const std::vector<hf::Hypergraph>& factors, const std::string& kind,
                         const std::vector<std::vector<std::size_t>>* partition) {
  std::ostringstream out;
  out << "# " << kind << " prime factors: " << factors.size() << '\n';
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::ostringstream note;
    note << "factor " << i + 1 << " of " << factors.size();
    if (partition) {
      note << ", skeleton factors";
      for (std::size_t idx : (*partition)[i]) note << ' ' << idx;
    }
    out << hf::to_text(factors[i], note.str());
  }
  return out.str();
}

struct Common {
  std::string caps;
  hf::Limits limits() const { return hf::parse_limits(caps, hf::limits_from_environment()); }
};

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Products, Cartesian skeletons and prime factorizations of hypergraphs"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--caps", common.caps, "Size cap overrides, key=value,... (after HYPERFACTOR_CAPS)")
      ->check([](const std::string& text) {
        try {
          hf::parse_limits(text);
          return std::string();
        } catch (const std::invalid_argument& e) {
          return std::string(e.what());
        }
      });

  std::string out_path;
  bool json = false;
  int status = kOk;

  // validate
  auto* validate = app.add_subcommand("validate", "Report simplicity, connectivity and thinness");
  std::string validate_file;
  validate->add_option("file", validate_file)->required();
  validate->add_flag("--json", json);
  validate->callback([&] {
    const auto h = hf::load(validate_file);
    const auto r = hf::validate(h);
    emit(json ? hf::cli::dump(hf::cli::to_json(r)) : hf::cli::validation_text(r), "");
    if (!r.simple) std::cerr << "hyperfactor: not simple\n";
    if (!r.connected) std::cerr << "hyperfactor: not connected\n";
    if (!r.thin) std::cerr << "hyperfactor: not thin\n";
    if (!r.simple || !r.connected || !r.thin) status = kRejected;
  });

  // two-section
  auto* section = app.add_subcommand("two-section", "Write the 2-section graph");
  std::string section_file;
  section->add_option("file", section_file)->required();
  section->add_option("-o,--output", out_path);
  section->add_flag("--json", json);
  section->callback([&] {
    const auto g = hf::two_section(hf::load(section_file)).to_hypergraph();
    emit(json ? hf::cli::dump(hf::cli::to_json(g)) : hf::to_text(g), out_path);
  });

  // product
  auto* prod = app.add_subcommand("product", "Build the Cartesian, normal or strong product");
  std::string kind_name = "strong";
  std::string prod_a, prod_b, coords_path;
  prod->add_option("--kind", kind_name)->check(CLI::IsMember({"cartesian", "normal", "strong"}));
  prod->add_option("first", prod_a)->required();
  prod->add_option("second", prod_b)->required();
  prod->add_option("-o,--output", out_path);
  prod->add_option("--coords", coords_path, "Write vertex coordinates to this file");
  prod->add_flag("--json", json);
  prod->callback([&] {
    const auto kind = hf::parse_product_kind(kind_name);
    const auto r = hf::product(hf::load(prod_a), hf::load(prod_b), kind, common.limits());
    if (json) {
      Json doc = hf::cli::to_json(r.hypergraph);
      doc["kind"] = kind_name;
      doc["coordinates"] = hf::cli::to_json(r.coords);
      emit(hf::cli::dump(doc), out_path);
    } else {
      emit(hf::to_text(r.hypergraph), out_path);
    }
    if (!coords_path.empty()) emit(hf::cli::coordinates_text(r.coords), coords_path);
  });

  // skeleton
  auto* skel = app.add_subcommand("skeleton", "Cartesian skeleton and the removed dispensable edges");
  std::string skel_file, removed_path;
  skel->add_option("file", skel_file)->required();
  skel->add_option("-o,--output", out_path);
  skel->add_option("--removed", removed_path, "Write the removed edges to this file");
  skel->add_flag("--json", json);
  skel->callback([&] {
    const auto h = hf::load(skel_file);
    const auto s = hf::cartesian_skeleton(h);
    if (!s.input_thin) std::cerr << "hyperfactor: warning: input is not thin; the skeleton carries no guarantee\n";
    const auto removed = hf::cli::removed_as_hypergraph(h, s);
    if (json) {
      Json doc = hf::cli::to_json(s.skeleton);
      doc["removed"] = hf::cli::to_json(removed)["edges"];
      doc["dispensable_pairs"] = Json::array();
      for (auto [x, y] : s.removed.graph_pairs) doc["dispensable_pairs"].push_back({x, y});
      doc["input_thin"] = s.input_thin;
      emit(hf::cli::dump(doc), out_path);
    } else {
      emit(hf::to_text(s.skeleton), out_path);
    }
    if (!removed_path.empty()) {
      emit(json ? hf::cli::dump(hf::cli::to_json(removed)) : hf::to_text(removed), removed_path);
    }
  });

  // factorize
  auto* fact = app.add_subcommand("factorize", "Prime factor decomposition");
  std::string fact_file, out_prefix;
  bool certificate = false;
  bool timing = false;
  fact->add_option("--kind", kind_name)->check(CLI::IsMember({"cartesian", "normal", "strong"}));
  fact->add_option("file", fact_file)->required();
  fact->add_option("--coords", coords_path, "Write vertex coordinates to this file");
  fact->add_option("--out-prefix", out_prefix, "Write factor i to <prefix><i>.hg");
  fact->add_flag("--certificate", certificate, "Include the vertex map onto the product of the factors");
  fact->add_flag("--timing", timing, "Report wall time (makes output nondeterministic)");
  fact->add_option("-o,--output", out_path);
  fact->add_flag("--json", json);
  fact->callback([&] {
    const auto kind = hf::parse_product_kind(kind_name);
    const auto h = hf::load(fact_file);
    const auto limits = common.limits();
    const auto start = std::chrono::steady_clock::now();

    std::vector<hf::Hypergraph> factors;
    hf::Coordinates coords;
    std::optional<hf::PrimeFactorReport> report;
    std::vector<std::size_t> edge_color;
    if (kind == hf::ProductKind::Cartesian) {
      auto f = hf::hypergraph_cartesian_pfd(h, limits);
      factors = std::move(f.factors);
      coords = std::move(f.coords);
      edge_color = std::move(f.edge_color);
    } else {
      report = hf::pfd(h, kind, limits);
      factors = report->factors;
      coords = report->coords;
    }
    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const auto map = encoding_map(coords);

    if (json) {
      Json doc;
      doc["kind"] = kind_name;
      doc["n"] = h.vertex_count();
      doc["factors"] = Json::array();
      for (const auto& f : factors) doc["factors"].push_back(hf::cli::to_json(f));
      doc["coordinates"] = hf::cli::to_json(coords);
      if (report) {
        doc["index_partition"] = report->index_partition;
        doc["skeleton"] = {{"removed_edges", report->removed_edges},
                           {"factor_count", report->skeleton_coords.factor_count()},
                           {"source", report->two_section_skeleton ? "two_section" : "hypergraph"}};
        doc["verdicts"] = Json::array();
        for (const auto& a : report->attempts) {
          Json v;
          v["subset"] = a.subset;
          v["components_isomorphic"] = a.components_isomorphic;
          v["accepted"] = a.accepted;
          if (a.verdict) v["verdict"] = hf::cli::to_json(*a.verdict);
          doc["verdicts"].push_back(v);
        }
      } else {
        doc["edge_color"] = edge_color;
      }
      doc["certificate"] = {{"verified", true}};
      if (certificate) doc["certificate"]["bijection"] = map;
      if (timing) doc["timing_ms"] = elapsed_ms;
      emit(hf::cli::dump(doc), out_path);
    } else {
      std::string text = factors_text(factors, kind_name, report ? &report->index_partition : nullptr);
      if (report && report->two_section_skeleton) {
        text += "# hypergraph skeleton disconnected; skeleton factors taken from the 2-section\n";
      }
      if (certificate) {
        std::ostringstream cert;
        cert << "# certificate verified: vertex v maps to product vertex\n";
        for (hf::VertexId v = 0; v < map.size(); ++v) cert << "# map " << v << ' ' << map[v] << '\n';
        if (report) {
          for (const auto& a : report->attempts) {
            cert << "# subset";
            for (std::size_t i : a.subset) cert << ' ' << i;
            cert << ": components " << (a.components_isomorphic ? "isomorphic" : "rejected");
            if (a.verdict) {
              cert << ", exact " << (a.verdict->exact ? "yes" : "no") << ", counting "
                   << (a.verdict->counting ? "yes" : "no") << " (" << a.verdict->valid_noncartesian << " valid, "
                   << a.verdict->invalid_noncartesian << " invalid, formula " << a.verdict->formula_value << ")";
            }
            cert << '\n';
          }
        }
        text += cert.str();
      }
      if (timing) text += "# time_ms " + std::to_string(elapsed_ms) + '\n';
      emit(text, out_path);
    }
    if (!coords_path.empty()) emit(hf::cli::coordinates_text(coords), coords_path);
    for (std::size_t i = 0; i < factors.size() && !out_prefix.empty(); ++i) {
      emit(hf::to_text(factors[i]), out_prefix + std::to_string(i + 1) + ".hg");
    }
  });

  // count
  auto* count = app.add_subcommand("count", "Number of non-Cartesian product edges");
  std::string count_a, count_b;
  bool exact = false;
  count->add_option("--kind", kind_name)->check(CLI::IsMember({"normal", "strong"}));
  count->add_option("first", count_a)->required();
  count->add_option("second", count_b)->required();
  count->add_flag("--exact", exact, "Also build the product and count its edges");
  count->add_flag("--json", json);
  count->callback([&] {
    const auto kind = hf::parse_product_kind(kind_name);
    const auto a = hf::load(count_a);
    const auto b = hf::load(count_b);
    const auto limits = common.limits();
    std::optional<hf::CountReport> report;
    const hf::BigInt formula = hf::count_noncartesian_formula(a, b, kind, limits);
    if (exact) report = hf::count_noncartesian_exact(a, b, kind, limits);
    const bool linear = hf::edges_pairwise_linear(a) && hf::edges_pairwise_linear(b);
    if (json) {
      Json doc;
      doc["kind"] = kind_name;
      doc["formula"] = formula.str();
      if (report) {
        doc["enumerated"] = report->enumerated_value.str();
        doc["agrees"] = report->agrees();
      }
      doc["linear_factors"] = linear;
      emit(hf::cli::dump(doc), "");
    } else {
      std::ostringstream out;
      out << "formula " << formula << '\n';
      if (report) out << "enumerated " << report->enumerated_value << "\nagrees " << (report->agrees() ? "yes" : "no") << '\n';
      emit(out.str(), "");
    }
  });

  // iso
  auto* iso = app.add_subcommand("iso", "Isomorphism test");
  std::string iso_a, iso_b;
  iso->add_option("first", iso_a)->required();
  iso->add_option("second", iso_b)->required();
  iso->add_flag("--json", json);
  iso->callback([&] {
    const auto b = hf::find_isomorphism(hf::load(iso_a), hf::load(iso_b), common.limits());
    if (json) {
      Json doc;
      doc["isomorphic"] = b.has_value();
      doc["bijection"] = b ? Json(*b) : Json(nullptr);
      emit(hf::cli::dump(doc), "");
    } else {
      std::ostringstream out;
      out << (b ? "isomorphic\n" : "not isomorphic\n");
      if (b)
        for (hf::VertexId v = 0; v < b->size(); ++v) out << "map " << v << ' ' << (*b)[v] << '\n';
      emit(out.str(), "");
    }
  });

  // distance
  auto* dist = app.add_subcommand("distance", "Distance between two vertices");
  std::string dist_file;
  hf::VertexId du = 0, dv = 0;
  dist->add_option("file", dist_file)->required();
  dist->add_option("u", du)->required();
  dist->add_option("v", dv)->required();
  dist->add_flag("--json", json);
  dist->callback([&] {
    const auto d = hf::distance(hf::load(dist_file), du, dv);
    emit(json ? hf::cli::dump(distance_json(du, dv, d)) : distance_text(d) + "\n", "");
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Brute-force reference computations");
  oracle->require_subcommand(1);
  auto* opfd = oracle->add_subcommand("pfd", "Exhaustive prime factorization");
  std::string opfd_file;
  opfd->add_option("--kind", kind_name)->check(CLI::IsMember({"cartesian", "normal", "strong"}));
  opfd->add_option("file", opfd_file)->required();
  opfd->add_flag("--json", json);
  opfd->callback([&] {
    const auto r = hf::oracle::brute_pfd(hf::load(opfd_file), hf::parse_product_kind(kind_name), common.limits());
    if (json) {
      Json doc;
      doc["kind"] = kind_name;
      doc["factors"] = Json::array();
      for (const auto& f : r.factors) doc["factors"].push_back(hf::cli::to_json(f));
      emit(hf::cli::dump(doc), "");
    } else {
      emit(factors_text(r.factors, kind_name, nullptr), "");
    }
  });
  auto* ocount = oracle->add_subcommand("count", "Count injective (normal) or surjective (strong) maps a -> b");
  std::size_t ca = 0, cb = 0;
  ocount->add_option("--kind", kind_name)->check(CLI::IsMember({"normal", "strong"}));
  ocount->add_option("a", ca)->required();
  ocount->add_option("b", cb)->required();
  ocount->add_flag("--json", json);
  ocount->callback([&] {
    const auto n = hf::oracle::brute_count_maps(ca, cb, hf::parse_product_kind(kind_name), common.limits());
    if (json) {
      emit(hf::cli::dump(Json{{"kind", kind_name}, {"a", ca}, {"b", cb}, {"count", n}}), "");
    } else {
      emit(std::to_string(n) + "\n", "");
    }
  });
  auto* odisp = oracle->add_subcommand("dispensable", "Dispensable edges evaluated on the hypergraph directly");
  std::string odisp_file;
  odisp->add_option("file", odisp_file)->required();
  odisp->add_option("-o,--output", out_path);
  odisp->add_flag("--json", json);
  odisp->callback([&] {
    const auto h = hf::load(odisp_file);
    const hf::Hypergraph removed(h.vertex_count(), hf::oracle::brute_dispensable(h, common.limits()));
    emit(json ? hf::cli::dump(hf::cli::to_json(removed)) : hf::to_text(removed), out_path);
  });
  auto* odist = oracle->add_subcommand("distance", "Distance by exhaustive path search");
  std::string odist_file;
  odist->add_option("file", odist_file)->required();
  odist->add_option("u", du)->required();
  odist->add_option("v", dv)->required();
  odist->add_flag("--json", json);
  odist->callback([&] {
    const auto d = hf::oracle::brute_distance(hf::load(odist_file), du, dv, common.limits());
    emit(json ? hf::cli::dump(distance_json(du, dv, d)) : distance_text(d) + "\n", "");
  });

  // gen
  auto* gen = app.add_subcommand("gen", "Seeded random hypergraph");
  hf::GeneratorSpec spec;
  std::vector<std::string> require;
  std::string prime_kind = "strong";
  bool allow_nonsimple = false;
  std::optional<std::size_t> attempts;
  gen->add_option("--n", spec.n, "Vertex count")->required();
  gen->add_option("--rank", spec.rank_max, "Rank (largest edge size), at least 2");
  gen->add_option("--degree", spec.degree_max, "Maximum degree, 0 for unbounded");
  gen->add_option("--seed", spec.seed);
  gen->add_option("--require", require, "Comma-separated: thin, connected, simple, prime")
      ->delimiter(',')
      ->check(CLI::IsMember({"thin", "connected", "simple", "prime"}));
  gen->add_option("--prime-kind", prime_kind)->check(CLI::IsMember({"cartesian", "normal", "strong"}));
  gen->add_flag("--allow-nonsimple", allow_nonsimple, "Do not imply the 'simple' requirement");
  gen->add_option("--attempts", attempts, "Attempt budget (default: gen_attempts cap)");
  gen->add_option("-o,--output", out_path);
  gen->add_flag("--json", json);
  gen->callback([&] {
    spec.require_simple = !allow_nonsimple;
    for (const auto& r : require) {
      if (r == "thin") spec.require_thin = true;
      if (r == "connected") spec.require_connected = true;
      if (r == "simple") spec.require_simple = true;
      if (r == "prime") spec.require_prime = true;
    }
    spec.prime_kind = hf::parse_product_kind(prime_kind);
    auto limits = common.limits();
    if (attempts) limits.gen_attempts = *attempts;
    const auto g = hf::generate(spec, limits);
    if (json) {
      Json doc = hf::cli::to_json(g.hypergraph);
      doc["provenance"] = g.provenance;
      emit(hf::cli::dump(doc), out_path);
    } else {
      emit(hf::to_text(g.hypergraph, g.provenance), out_path);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }
  return status;
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hf::RejectedInput& e) {
    std::cerr << "hyperfactor: " << e.what() << '\n';
    return kRejected;
  } catch (const hf::ParseError& e) {
    std::cerr << "hyperfactor: parse error: " << e.what() << '\n';
    return kParse;
  } catch (const hf::CapExceeded& e) {
    std::cerr << "hyperfactor: cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const hf::InternalError& e) {
    std::cerr << "hyperfactor: internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hyperfactor: " << e.what() << '\n';
    return kParse;
  } catch (const std::out_of_range& e) {
    std::cerr << "hyperfactor: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "hyperfactor: internal error: " << e.what() << '\n';
    return kInternal;
  }
}
