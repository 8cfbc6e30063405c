#pragma once

#include <cstddef>

#include "sparsehalf/graph.hpp"
#include "sparsehalf/oracle.hpp"
#include "sparsehalf/outcome.hpp"
#include "sparsehalf/rational.hpp"

namespace sparsehalf {

/// Per-vertex quantities of the local density arguments.
struct DensityParams {
  Rational alpha;
  Rational c;
  std::vector<Rational> d;        // d(v)/n
  std::vector<Rational> alpha_v;  // n/(2d(v)); zero for isolated v
  std::vector<Rational> c_v;      // e(N(v))/d(v)^2; zero for isolated v
};

DensityParams density_params(const Graph& g, const Rational& alpha);

/// Triangle-free G, K = floor(alpha n) with K/n + c >= 1: a K-set with
/// e(S) <= (2K/n - 1) e(G). Minimum-degree peeling, then the best
/// neighbourhood extension over all remaining vertices. Throws
/// PreconditionError on a triangle or when K/n + c < 1.
SelectionOutcome triangle_free_local_density(const Graph& g, const Rational& alpha);

/// Regular triangle-free G with alpha n integral: whether every alpha n-set
/// spans at least (2 alpha - 1) e(G) edges, by the oracle.
bool regular_lower_bound_check(const Graph& g, const Rational& alpha, const OracleOptions& opts = {});

struct KrivelevichOptions {
  /// The oracle joins the strategies at or below this many vertices.
  std::size_t oracle_threshold = 26;
  OracleOptions oracle;
};

/// Triangle-free G, 3/5 <= alpha <= 1, K = floor(alpha n): a K-set with
/// e(S) <= (2K - n) n / 4. Throws CounterexampleCandidate when no strategy
/// meets the bound.
SelectionOutcome krivelevich_select(const Graph& g, const Rational& alpha, const KrivelevichOptions& opts = {});

}  // namespace sparsehalf
