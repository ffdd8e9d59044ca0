#include "hyperfactor/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hyperfactor {

namespace {

std::size_t* field(Limits& limits, std::string_view key) {
  if (key == "iso_max_vertices") return &limits.iso_max_vertices;
  if (key == "product_max_vertices") return &limits.product_max_vertices;
  if (key == "product_max_edges") return &limits.product_max_edges;
  if (key == "rank_max") return &limits.rank_max;
  if (key == "brute_pfd_max_vertices") return &limits.brute_pfd_max_vertices;
  if (key == "brute_distance_max_vertices") return &limits.brute_distance_max_vertices;
  if (key == "brute_dispensable_max_vertices") return &limits.brute_dispensable_max_vertices;
  if (key == "brute_maps_max") return &limits.brute_maps_max;
  if (key == "brute_iso_max_vertices") return &limits.brute_iso_max_vertices;
  if (key == "gen_attempts") return &limits.gen_attempts;
  return nullptr;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Limits parse_limits(std::string_view text, Limits base) {
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;

    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("cap override '" + std::string(item) + "' is not key=value");
    }
    const auto key = trim(item.substr(0, eq));
    const auto value = trim(item.substr(eq + 1));
    std::size_t* target = field(base, key);
    if (target == nullptr) {
      throw std::invalid_argument("unknown cap '" + std::string(key) + "'");
    }
    std::size_t parsed = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
      throw std::invalid_argument("cap '" + std::string(key) + "' needs a non-negative integer");
    }
    *target = parsed;
  }
  return base;
}

Limits limits_from_environment() {
  const char* env = std::getenv("HYPERFACTOR_CAPS");
  if (env == nullptr) return {};
  return parse_limits(env);
}

}  // namespace hyperfactor
