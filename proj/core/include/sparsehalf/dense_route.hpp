#pragma once

#include "sparsehalf/graph.hpp"
#include "sparsehalf/outcome.hpp"

namespace sparsehalf {

/// Sparse half for dense K4-free graphs. Works on a maximal K4-free
/// supergraph H and reports e(S) in G (at most e_H(S)). When H = I v Gamma
/// with Gamma triangle-free: half of I, the Krivelevich construction inside
/// Gamma, a uniform half of Gamma, or I together with part of a Gamma
/// neighbourhood. Otherwise an independent set of ceil(9n/25) vertices
/// extended to a half. The guarantee (e <= n^2/18) applies when
/// delta(G) >= 0.59 n. Throws PreconditionError on a K4 or when no branch
/// applies.
SelectionOutcome dense_route(const Graph& g);

}  // namespace sparsehalf
