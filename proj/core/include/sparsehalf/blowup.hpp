#pragma once

#include <span>

#include "sparsehalf/graph.hpp"

namespace sparsehalf {

/// Blocks are a partition of V(H) into independent twin classes (every
/// vertex of a block has the same neighbourhood). Returns S' with
/// |S'| = |S|, e(S') <= e(S) and at most one block partially met. Two
/// partially met blocks are resolved by moving vertices between them
/// towards whichever end gives fewer edges; e is concave along that move.
/// Throws PreconditionError when the blocks are not a blow-up structure.
VertexSubset blow_up_round(const Graph& h, std::span<const VertexSubset> blocks, const VertexSubset& s);

/// Number of blocks met partially by S.
std::size_t fractional_blocks(std::span<const VertexSubset> blocks, const VertexSubset& s);

}  // namespace sparsehalf
