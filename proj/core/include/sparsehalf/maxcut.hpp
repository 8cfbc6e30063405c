#pragma once

#include <cstddef>
#include <cstdint>

#include "sparsehalf/graph.hpp"
#include "sparsehalf/outcome.hpp"
#include "sparsehalf/rational.hpp"

namespace sparsehalf {

struct MaxCutOptions {
  /// Exact enumeration at or below this many vertices.
  std::size_t exact_threshold = 28;
  std::size_t restarts = 32;
  std::uint64_t seed = 0x6a09e667f3bcc908ULL;
};

struct MaxCutResult {
  VertexSubset a;
  VertexSubset b;
  std::uint64_t cut = 0;
  bool exact = false;
  /// (4/13) e(G) + (111/104) e(G)^2 / n^2: a lower bound on the maximum cut
  /// of K4-free graphs.
  Rational sudakov_floor;
};

MaxCutResult max_cut_search(const Graph& g, const MaxCutOptions& opts = {});

Rational sudakov_floor(const Graph& g);

/// Better of a floor(n/2)-set inside the larger side and the smaller side
/// extended into the larger one. The smaller side plays the role of A. The
/// guarantee is e < n^2/18 and applies when e(A,B) > 9 c^2 n^2 / 4.
SelectionOutcome sparse_half_from_cut(const Graph& g, const VertexSubset& a);

}  // namespace sparsehalf
