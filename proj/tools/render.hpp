#pragma once

#include <string>

#include <json.hpp>

#include "hyperfactor/cartesian_pfd.hpp"
#include "hyperfactor/hypergraph.hpp"
#include "hyperfactor/products.hpp"
#include "hyperfactor/skeleton.hpp"
#include "hyperfactor/strong_pfd.hpp"

namespace hyperfactor::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Hypergraph& h);
Json to_json(const Coordinates& c);
Json to_json(const ValidationReport& r);
Json to_json(const CompletenessVerdict& v);

/// Compact JSON document terminated by a newline.
std::string dump(const Json& doc);

/// Line format for coordinates:
///
///     coordinates <n> <k>
///     dims <d1> ... <dk>
///     v <id> <x1> ... <xk>     (n lines, ascending id)
std::string coordinates_text(const Coordinates& c);

std::string validation_text(const ValidationReport& r);

/// Removed hyperedges as a hypergraph on the same vertex set.
Hypergraph removed_as_hypergraph(const Hypergraph& h, const SkeletonResult& s);

}  // namespace hyperfactor::cli
