#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sparsehalf/expr.hpp"
#include "sparsehalf/interval.hpp"
#include "sparsehalf/rational.hpp"

namespace sparsehalf {

enum class Sign { Positive, Negative };

const char* to_string(Sign s);
Sign parse_sign(const std::string& s);

/// Exact range [lo, hi] of one variable.
struct RationalRange {
  Rational lo;
  Rational hi;
  Interval enclosure() const { return {Interval::enclose(lo).lo, Interval::enclose(hi).hi}; }
};

using Box = std::vector<Interval>;

/// A piece of the domain next to a singular locus. On the collar
/// f = P / D + R with D >= 0; the collar is certified when P > 0 and
/// P_lo / D_hi + R_lo clears the margin, so f exceeds the margin wherever it
/// is defined there.
struct Collar {
  std::string name;
  std::vector<RationalRange> range;
  Expr numerator;
  Expr denominator;
  Expr remainder;
  /// Locus approached, for the certificate.
  std::string locus;
};

struct CertifiedFunction {
  std::string id;
  std::vector<std::string> variables;
  Expr expr;
  std::vector<RationalRange> domain;
  /// Regular cells, each the root of a bisection tree.
  std::vector<std::vector<RationalRange>> cells;
  std::vector<Collar> collars;
  Sign sign = Sign::Positive;
  Rational margin;

  std::size_t arity() const { return variables.size(); }
};

/// Width of the collars around singular loci.
const Rational& collar_width();

/// Expressions shared by the registry: g(c) and 1 - g(c) of a variable.
Expr g_expr(const Expr& c);
Expr one_minus_g_expr(const Expr& c);

/// Registry entries: g, h, k, ell, m, quad_min, case1_poly.
const CertifiedFunction& certified_function(const std::string& id);
std::vector<std::string> certified_function_ids();

Box enclosure_box(const std::vector<RationalRange>& ranges);

}  // namespace sparsehalf
