#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "sparsehalf/graph.hpp"
#include "sparsehalf/outcome.hpp"
#include "sparsehalf/rational.hpp"
#include "sparsehalf/structure.hpp"

namespace sparsehalf {

/// g(c) = 1/(3(1 - 2c)).
Rational g_of_c(const Rational& c);

struct FourPartition {
  std::array<VertexSubset, 4> parts;
  std::array<bool, 4> independent{};
  std::array<Rational, 4> x;  // |V_i| / n
  /// e_ij = e(V_i, V_j) for i < j, zero-based; e[i][i] = e(V_i).
  std::array<std::array<std::uint64_t, 4>, 4> e{};
  Rational g_c;

  static FourPartition build(const Graph& g, std::array<VertexSubset, 3> first_three);
};

struct HeaviestTriangle {
  Triangle triangle;
  std::uint64_t codegree_sum = 0;
  /// N(uv), N(vw), N(wu) for triangle (u, v, w).
  std::array<VertexSubset, 3> parts;
};

/// Triangle maximising d(uv) + d(vw) + d(wu), lexicographically first on
/// ties. Throws PreconditionError on a triangle-free graph.
HeaviestTriangle heaviest_triangle(const Graph& g);

/// One entry of a selection scheme: skip the part, take all of it, or take
/// the remainder floor(n/2) - (sizes of the full parts) from it uniformly.
enum class Quota { Zero, Full, Rest };

struct SchemeRow {
  int table = 0;
  int row = 0;
  std::array<Quota, 4> quotas{};
  std::string label() const;
};

/// The rows of the four selection tables (6, 6, 6 and 8 rows).
std::span<const SchemeRow> scheme_table(int table);

/// Integer quota of each part for this row, or nullopt when the row is
/// infeasible (negative remainder or remainder above the part size).
std::optional<std::array<std::size_t, 4>> scheme_quotas(const FourPartition& p, const SchemeRow& row);

/// Full parts taken entirely, the rest part sampled by conditional
/// expectation. analytic_bound is the exact expectation of the row.
std::optional<SelectionOutcome> scheme_select(const Graph& g, const FourPartition& p, const SchemeRow& row);

struct MediumRouteResult {
  SelectionOutcome best;
  FourPartition partition;
  HeaviestTriangle triangle;
  /// |V_1| + |V_2| + |V_3| >= g(c) n.
  bool large_parts = false;
};

/// Heaviest-triangle partition, parts sorted by size, every feasible row of
/// every table. Throws PreconditionError when G has a K4 or no triangle.
MediumRouteResult medium_route_detail(const Graph& g);
SelectionOutcome medium_route(const Graph& g);

}  // namespace sparsehalf
