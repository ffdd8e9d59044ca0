#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "hyperfactor/generator.hpp"
#include "hyperfactor/hypergraph.hpp"
#include "hyperfactor/isomorphism.hpp"

namespace hyperfactor::testing {

Hypergraph hg(std::size_t n, std::initializer_list<std::initializer_list<VertexId>> edges);

Hypergraph complete_graph(std::size_t n);
Hypergraph path(std::size_t n);
Hypergraph cycle(std::size_t n);
/// One edge holding all k vertices.
Hypergraph single_edge(std::size_t k);
/// (5, {{0,1,2},{1,3},{2,4}}): thin, prime, rank 3.
Hypergraph t3_prime();

struct CorpusSpec {
  std::size_t count = 10;
  std::uint64_t seed = 1;
  std::size_t n_min = 2;
  std::size_t n_max = 5;
  std::size_t rank_max = 3;
  bool thin = false;
  bool connected = true;
};

/// Deterministic instances: vertex counts cycle through [n_min, n_max], ranks
/// through [2, rank_max] (clipped to n), seeds count up from spec.seed.
/// Thin corpora lift n to at least 3 and clip the rank further to sizes that
/// admit thin instances.
std::vector<Hypergraph> random_hypergraphs(const CorpusSpec& spec);

/// Consecutive pairs of random_hypergraphs with 2 * count instances.
std::vector<std::pair<Hypergraph, Hypergraph>> random_pairs(CorpusSpec spec);

/// Uniformly random relabelling driven by `seed`.
VertexBijection random_permutation(std::size_t n, std::uint64_t seed);

}  // namespace hyperfactor::testing
