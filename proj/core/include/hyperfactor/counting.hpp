#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperfactor/hypergraph.hpp"
#include "hyperfactor/limits.hpp"
#include "hyperfactor/products.hpp"

namespace hyperfactor {

using BigInt = boost::multiprecision::cpp_int;

/// Stirling number of the second kind, S(n, k). Requires 0 <= k <= n <= limits.rank_max.
BigInt stirling2(std::size_t n, std::size_t k, const Limits& limits = {});

/// m!, requires m <= limits.rank_max.
BigInt factorial(std::size_t m, const Limits& limits = {});

/// Number of non-Cartesian edges of H1 x H2 predicted by summing, over all
/// ordered edge pairs (e1, e2) with sizes a, b:
///   Normal:  max(a,b)! / |a-b|!            (injective maps small -> large)
///   Strong:  min(a,b)! * S(max(a,b), min(a,b))   (surjections large -> small)
/// Throws std::invalid_argument for kind == Cartesian.
BigInt count_noncartesian_formula(const Hypergraph& h1, const Hypergraph& h2, ProductKind kind,
                                  const Limits& limits = {});

struct CountReport {
  ProductKind kind = ProductKind::Normal;
  BigInt formula_value;
  BigInt enumerated_value;

  bool agrees() const { return formula_value == enumerated_value; }
};

/// Builds the product, classifies its edges and counts the distinct
/// non-Cartesian ones next to the formula value.
CountReport count_noncartesian_exact(const Hypergraph& h1, const Hypergraph& h2, ProductKind kind,
                                     const Limits& limits = {});

/// True when every two distinct edges of `h` share at most one vertex. Under
/// this condition the formula counts each non-Cartesian edge exactly once.
bool edges_pairwise_linear(const Hypergraph& h);

}  // namespace hyperfactor
