#pragma once

#include <cstddef>
#include <string_view>

namespace hyperfactor {

/// Size caps shared by all modules. Every field can be overridden through the
/// HYPERFACTOR_CAPS environment variable, e.g. "iso_max_vertices=80,gen_attempts=500".
struct Limits {
  std::size_t iso_max_vertices = 64;
  std::size_t product_max_vertices = 4096;
  std::size_t product_max_edges = 1'000'000;
  std::size_t rank_max = 20;  // stirling / factorial tables
  std::size_t brute_pfd_max_vertices = 12;
  std::size_t brute_distance_max_vertices = 8;
  std::size_t brute_dispensable_max_vertices = 20;
  std::size_t brute_maps_max = 7;
  std::size_t brute_iso_max_vertices = 10;
  std::size_t gen_attempts = 100'000;
};

/// Applies "key=value,..." overrides on top of `base`. Throws std::invalid_argument
/// on unknown keys or non-numeric values.
Limits parse_limits(std::string_view text, Limits base = {});

/// Defaults overridden by HYPERFACTOR_CAPS when the variable is set.
Limits limits_from_environment();

}  // namespace hyperfactor
