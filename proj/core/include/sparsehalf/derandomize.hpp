#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sparsehalf/graph.hpp"
#include "sparsehalf/outcome.hpp"
#include "sparsehalf/rational.hpp"

namespace sparsehalf {

/// One pool of the joint random experiment: `take` vertices drawn uniformly
/// without replacement from `pool`, independently of the other pools.
struct PoolQuota {
  VertexSubset pool;
  std::size_t take = 0;
};

struct DerandomizedChoice {
  VertexSubset subset;
  Rational expectation;             // E[e(forced u S_1 u ... u S_t)]
  std::vector<Rational> trace;      // conditional expectation after each decision
  std::uint64_t achieved = 0;
};

/// Method of conditional expectations for e(forced u S_1 u ... u S_t).
/// Vertices are decided in ascending id; each decision keeps the smaller
/// conditional expectation, ties going to inclusion. Pools must be
/// pairwise disjoint and disjoint from `forced`.
DerandomizedChoice conditional_expectation_select(const Graph& g, const VertexSubset& forced,
                                                  std::span<const PoolQuota> pools);

/// k vertices with e(S) <= e(G) k(k-1)/(n(n-1)).
SelectionOutcome derandomized_uniform_subset(const Graph& g, std::size_t k);

/// A together with k_extra vertices of B = V \ A, with
/// e <= e(A) + rho e(A,B) + rho2 e(B), rho = k/|B|, rho2 = k(k-1)/(|B|(|B|-1)).
SelectionOutcome derandomized_extension(const Graph& g, const VertexSubset& a, std::size_t k_extra);

/// P(a given pair of pool vertices is chosen) = take(take-1)/(m(m-1)).
Rational pair_probability(std::size_t take, std::size_t pool);

}  // namespace sparsehalf
