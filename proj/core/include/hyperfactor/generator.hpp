#pragma once

#include <cstdint>
#include <string>

#include "hyperfactor/hypergraph.hpp"
#include "hyperfactor/limits.hpp"
#include "hyperfactor/products.hpp"

namespace hyperfactor {

struct GeneratorSpec {
  std::size_t n = 1;
  /// Rank of the generated hypergraph; at least one edge has this size.
  std::size_t rank_max = 2;
  /// 0 means unbounded.
  std::size_t degree_max = 0;
  std::uint64_t seed = 0;
  bool require_thin = false;
  bool require_connected = false;
  bool require_simple = true;
  bool require_prime = false;
  /// Product w.r.t. which primality is required.
  ProductKind prime_kind = ProductKind::Strong;
};

struct GeneratedHypergraph {
  Hypergraph hypergraph;
  std::size_t attempts = 0;
  /// One-line provenance record: seed, parameters and attempt count.
  std::string provenance;
};

/// Rejection sampling with a seeded mt19937_64; identical specs give
/// identical results on every platform. Throws std::invalid_argument when
/// rank_max < 2 or n == 0, and CapExceeded once limits.gen_attempts samples
/// have been rejected.
GeneratedHypergraph generate(const GeneratorSpec& spec, const Limits& limits = {});

}  // namespace hyperfactor
