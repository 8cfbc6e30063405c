#pragma once

#include <string>
#include <vector>

#include "sparsehalf/rational.hpp"

namespace sparsehalf {

/// Exact rational identity or inequality used by the selectors.
struct ClosedFormCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Minimum over t of t^2 + B t + C with B = (2 - 3l/2)/(4l), C = (1 - l)/(4l).
Rational quadratic_minimum(const Rational& lambda);
/// (88 l - 73 l^2 - 16) / (256 l^2).
Rational quad_min_formula(const Rational& lambda);
/// (4/13) c + (111/104) c^2 - (9/4) c^2.
Rational case1_poly(const Rational& c);
/// Positive root of case1_poly.
Rational case1_poly_root();
/// 1 / (3 (1 - 2c)); requires c < 1/2.
Rational g_exact(const Rational& c);

std::vector<ClosedFormCheck> closed_form_checks();

}  // namespace sparsehalf
