#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sparsehalf/graph.hpp"
#include "sparsehalf/oracle.hpp"
#include "sparsehalf/outcome.hpp"
#include "sparsehalf/rational.hpp"

namespace sparsehalf {

enum class RouteChoice { Auto, Sparse, Medium, Dense, Oracle };

RouteChoice parse_route(const std::string& name);
const char* to_string(RouteChoice r);

struct SparseHalfOptions {
  RouteChoice route = RouteChoice::Auto;
  /// Defaults to floor(n/2). Other sizes run only the uniform selector and
  /// the oracle.
  std::optional<std::size_t> target_size;
  /// Runs the routes best-effort on graphs with a K4; guarantees are
  /// suppressed.
  bool allow_k4 = false;
  std::size_t oracle_threshold = 26;
  OracleOptions oracle;
};

struct RouteAttempt {
  std::string route;
  std::optional<SelectionOutcome> outcome;
  /// Why the route did not run; empty when it ran.
  std::string skipped;
};

struct SparseHalfResult {
  SelectionOutcome best;
  std::vector<RouteAttempt> attempts;
  std::optional<OracleResult> oracle;
  HalfVerdict verdict = HalfVerdict::Strict;
  Rational c;
  bool regular = false;
  std::size_t target = 0;
};

/// Runs every applicable route (and the oracle at or below the threshold)
/// and returns the best half. Throws PreconditionError on a K4 unless
/// allow_k4, and when an explicitly requested route does not apply.
SparseHalfResult find_sparse_half(const Graph& g, const SparseHalfOptions& opts = {});

struct BipartiteSplit {
  VertexSubset a;
  VertexSubset b;
  std::uint64_t removed = 0;  // e(A) + e(B)
  Rational bound;             // n^2 / 9
  bool within_bound = false;
};

/// Balanced bipartition from the best sparse half. Throws PreconditionError
/// for odd n or a K4.
BipartiteSplit make_bipartite(const Graph& g, const SparseHalfOptions& opts = {});

}  // namespace sparsehalf
