#include "hyperfactor/counting.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>

namespace hyperfactor {

namespace {

/// Factorials and Stirling numbers up to a fixed order, computed once by the
/// recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1).
struct Tables {
  explicit Tables(std::size_t order) : factorial(order + 1), stirling(order + 1, std::vector<BigInt>(order + 1)) {
    factorial[0] = 1;
    for (std::size_t m = 1; m <= order; ++m) factorial[m] = factorial[m - 1] * m;
    stirling[0][0] = 1;
    for (std::size_t n = 1; n <= order; ++n)
      for (std::size_t k = 1; k <= n; ++k) stirling[n][k] = BigInt(k) * stirling[n - 1][k] + stirling[n - 1][k - 1];
  }

  std::vector<BigInt> factorial;
  std::vector<std::vector<BigInt>> stirling;
};

const Tables& tables_for(std::size_t order) {
  // Tables are immutable once built; the largest order ever requested is cached.
  static const Tables standard(64);
  if (order <= 64) return standard;
  thread_local std::unique_ptr<Tables> large;
  if (!large || large->factorial.size() <= order) large = std::make_unique<Tables>(order);
  return *large;
}

void check_order(std::size_t n, const Limits& limits) {
  if (n > limits.rank_max) {
    throw std::out_of_range("argument " + std::to_string(n) + " exceeds rank cap " + std::to_string(limits.rank_max));
  }
}

}  // namespace

BigInt stirling2(std::size_t n, std::size_t k, const Limits& limits) {
  check_order(n, limits);
  if (k > n) throw std::out_of_range("stirling2 requires k <= n");
  return tables_for(n).stirling[n][k];
}

BigInt factorial(std::size_t m, const Limits& limits) {
  check_order(m, limits);
  return tables_for(m).factorial[m];
}

BigInt count_noncartesian_formula(const Hypergraph& h1, const Hypergraph& h2, ProductKind kind, const Limits& limits) {
  if (kind == ProductKind::Cartesian) throw std::invalid_argument("Cartesian products have no non-Cartesian edges");
  const std::size_t r = std::max(h1.rank(), h2.rank());
  check_order(r, limits);
  const Tables& t = tables_for(r);

  // Only the edge-size histograms matter.
  std::vector<std::size_t> count1(r + 1, 0);
  std::vector<std::size_t> count2(r + 1, 0);
  for (const auto& e : h1.edges()) ++count1[e.size()];
  for (const auto& e : h2.edges()) ++count2[e.size()];

  BigInt total = 0;
  for (std::size_t a = 1; a <= r; ++a) {
    if (count1[a] == 0) continue;
    for (std::size_t b = 1; b <= r; ++b) {
      if (count2[b] == 0) continue;
      const std::size_t hi = std::max(a, b);
      const std::size_t lo = std::min(a, b);
      const BigInt per_pair =
          kind == ProductKind::Normal ? BigInt(t.factorial[hi] / t.factorial[hi - lo]) : BigInt(t.factorial[lo] * t.stirling[hi][lo]);
      total += per_pair * count1[a] * count2[b];
    }
  }
  return total;
}

CountReport count_noncartesian_exact(const Hypergraph& h1, const Hypergraph& h2, ProductKind kind, const Limits& limits) {
  CountReport report;
  report.kind = kind;
  report.formula_value = count_noncartesian_formula(h1, h2, kind, limits);
  const auto prod = product(h1, h2, kind, limits);
  const auto labels = classify_edges(prod.hypergraph, prod.coords);
  report.enumerated_value =
      static_cast<std::size_t>(std::count_if(labels.begin(), labels.end(), [](const EdgeLabel& l) { return !l.cartesian(); }));
  return report;
}

bool edges_pairwise_linear(const Hypergraph& h) {
  const auto edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      std::size_t shared = 0;
      auto a = edges[i].begin();
      auto b = edges[j].begin();
      while (a != edges[i].end() && b != edges[j].end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++shared;
          ++a;
          ++b;
        }
      }
      if (shared > 1) return false;
    }
  }
  return true;
}

}  // namespace hyperfactor
