#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "sparsehalf/graph.hpp"
#include "sparsehalf/rational.hpp"

namespace sparsehalf {

struct OracleOptions {
  std::size_t cap = 30;
  /// Permits cap < n <= 64; runtime grows as C(n, k).
  bool allow_above_cap = false;
};

/// Reads SPARSEHALF_ORACLE_CAP when set, otherwise the default cap.
OracleOptions oracle_options_from_env();

struct OracleResult {
  std::uint64_t minimum = 0;
  /// Lexicographically smallest k-subset attaining the minimum.
  VertexSubset witness;
  std::uint64_t subsets_examined = 0;
  std::uint64_t pruned = 0;
};

/// Exact min over |S| = k of e(S) by branch and bound. Throws CapExceeded
/// above the cap and PreconditionError for k > n.
OracleResult min_edges_k_subset(const Graph& g, std::size_t k, const OracleOptions& opts = {});

struct LocalDensityProfile {
  std::uint64_t minimum = 0;
  Rational bound;  // (2k/n - 1) e(G)
  bool meets = false;  // minimum >= bound
};

LocalDensityProfile local_density_profile(const Graph& g, std::size_t k, const OracleOptions& opts = {});

enum class CharacterizationKind {
  /// Regular K4-free G, halves of size floor(n/2) against n^2/18; the
  /// extremal structure is T_3(n) with 6 | n.
  RegularK4Free,
  /// Triangle-free G, alpha > 3/5, alpha n integral, against
  /// (2 alpha - 1) n^2 / 4; the extremal structure is T_2(n).
  TriangleFreeLocalDensity,
  /// Bipartite G, 1/2 <= alpha <= 1, alpha n integral, against
  /// (2 alpha - 1) n^2 / 4; the extremal structure is T_2(n).
  BipartiteLocalDensity,
};

enum class Verdict { ConformsStrict, ConformsExtremal, Violates };

const char* to_string(Verdict v);

struct ExtremalReport {
  Verdict verdict = Verdict::ConformsStrict;
  std::size_t k = 0;
  std::uint64_t minimum = 0;
  Rational threshold;
  bool structure_matches = false;
  VertexSubset witness;
  /// graph6 of the instance; filled for every report so a violation can be
  /// replayed.
  std::string reproducer;
};

/// Oracle check of an extremal characterization. Throws PreconditionError
/// when G does not satisfy the hypotheses of the chosen statement.
ExtremalReport check_extremal_characterization(const Graph& g, CharacterizationKind kind,
                                               const std::optional<Rational>& alpha = std::nullopt,
                                               const OracleOptions& opts = {});

}  // namespace sparsehalf
