#include "sparsehalf/closed_form.hpp"

#include "sparsehalf/errors.hpp"

namespace sparsehalf {
namespace {

Rational q(std::int64_t n, std::int64_t d) { return Rational(n, d); }

ClosedFormCheck check(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok, std::move(detail)};
}

}  // namespace

Rational quadratic_minimum(const Rational& lambda) {
  if (lambda <= 0) throw PreconditionError("lambda must be positive");
  const Rational b = (2 - 3 * lambda / 2) / (4 * lambda);
  const Rational c = (1 - lambda) / (4 * lambda);
  return c - b * b / 4;
}

Rational quad_min_formula(const Rational& lambda) {
  if (lambda <= 0) throw PreconditionError("lambda must be positive");
  return (88 * lambda - 73 * lambda * lambda - 16) / (256 * lambda * lambda);
}

Rational case1_poly(const Rational& c) { return q(4, 13) * c + q(111, 104) * c * c - q(9, 4) * c * c; }

Rational case1_poly_root() {
  const Rational a1 = q(4, 13);
  const Rational a2 = q(111, 104) - q(9, 4);
  return -a1 / a2;
}

Rational g_exact(const Rational& c) {
  if (c >= q(1, 2)) throw PreconditionError("g(c) needs c < 1/2");
  return 1 / (3 * (1 - 2 * c));
}

std::vector<ClosedFormCheck> closed_form_checks() {
  std::vector<ClosedFormCheck> out;
  const Rational lambda = thresholds::kLambda;

  bool agree = true;
  for (const Rational& l : {lambda, q(1, 3), q(2, 5), q(7, 11), q(9, 10), q(13, 17)})
    agree = agree && quadratic_minimum(l) == quad_min_formula(l);
  out.push_back(check("quadratic_minimum_formula", agree, "C - B^2/4 = (88l - 73l^2 - 16)/(256l^2)"));

  const Rational m = quadratic_minimum(lambda);
  out.push_back(check("quadratic_minimum_at_8_13", m == q(111, 1024), "min = " + to_string(m)));

  const Rational coeff = (88 * lambda - 73 * lambda * lambda - 16) / (16 * lambda);
  out.push_back(check("edge_coefficient_at_8_13", coeff == q(111, 104) && lambda / 2 == q(4, 13),
                      "c^2 coefficient " + to_string(coeff) + ", c coefficient " + to_string(lambda / 2)));

  const Rational a2 = q(111, 104) - q(9, 4);
  const Rational root = case1_poly_root();
  out.push_back(check("case1_poly_root", a2 == q(-123, 104) && root == q(32, 123) && case1_poly(root) == 0,
                      "root " + to_string(root)));
  // Positive on (0, root) since the leading coefficient is negative.
  out.push_back(check("case1_poly_root_beyond_sparse_range", root > thresholds::kSparseDensity,
                      to_string(root) + " > 26/100"));

  out.push_back(check("g_at_5_18", g_exact(q(5, 18)) == q(3, 4), "g(5/18) = " + to_string(g_exact(q(5, 18)))));
  bool identity = true;
  for (const Rational& c : {q(1, 4), q(5, 18), q(297, 1000), q(3, 10), q(1, 3)})
    identity = identity && g_exact(c) - q(3, 4) == (18 * c - 5) / (4 * (3 - 6 * c));
  out.push_back(check("g_minus_three_quarters", identity, "g - 3/4 = (18c - 5)/(4(3 - 6c))"));

  const Rational dense = q(175, 1024) * q(144, 625) + q(49, 1024) * q(1, 3);
  out.push_back(check("dense_independent_bound", dense == q(4249, 76800) && dense < q(1, 18),
                      to_string(dense) + " < 1/18"));
  out.push_back(check("dense_split_sizes", thresholds::kDenseIndependent + q(7, 50) == q(1, 2), "9/25 + 7/50 = 1/2"));
  out.push_back(check("dense_min_degree_above_four_sevenths", thresholds::kDenseMinDegree > q(4, 7), "59/100 > 4/7"));
  out.push_back(check("medium_density_below_nine_fourteenths", 2 * thresholds::kMediumDensity < q(9, 14),
                      "297/500 < 9/14"));
  return out;
}

}  // namespace sparsehalf
