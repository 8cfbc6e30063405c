#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sparsehalf/graph.hpp"
#include "sparsehalf/rational.hpp"

namespace sparsehalf {

/// Whether a construction's promised bound applies to this instance.
enum class Guarantee {
  Held,             // preconditions held and achieved <= analytic_bound
  HypothesisUnmet,  // bound reported for information only
  Missed,           // preconditions held yet the bound was not met
};

/// Comparison of a half's edge count with n^2/18.
enum class HalfVerdict { Strict, Equality, Exceeds };

const char* to_string(Guarantee g);
const char* to_string(HalfVerdict v);

HalfVerdict compare_with_n2_over_18(std::uint64_t edges, std::size_t n);

struct SelectionOutcome {
  VertexSubset subset;
  Rational analytic_bound;
  std::uint64_t achieved = 0;
  std::string route;
  Guarantee guarantee = Guarantee::HypothesisUnmet;
  /// Conditional expectations visited by derandomized constructions, one
  /// per decided vertex, starting with the unconditioned expectation.
  std::vector<Rational> expectation_trace;
};

/// Strict order used wherever outcomes compete: fewer edges first, then the
/// lexicographically smaller subset.
bool better_outcome(const SelectionOutcome& a, const SelectionOutcome& b);

}  // namespace sparsehalf
