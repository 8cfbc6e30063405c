#include "sparsehalf/functions.hpp"

#include <map>

#include "sparsehalf/errors.hpp"

namespace sparsehalf {
namespace {

Expr q(std::int64_t num, std::int64_t den) { return Expr::constant(Rational(num, den)); }

RationalRange range(Rational lo, Rational hi) { return {std::move(lo), std::move(hi)}; }

CertifiedFunction make_g() {
  CertifiedFunction f;
  f.id = "g";
  f.variables = {"c"};
  f.expr = g_expr(Expr::var(0));
  f.domain = {range(Rational(1, 4), Rational(1, 3))};
  f.cells = {f.domain};
  return f;
}

CertifiedFunction make_h() {
  const Expr c = Expr::var(0);
  const Expr g = g_expr(c);
  const Expr omg = one_minus_g_expr(c);
  CertifiedFunction f;
  f.id = "h";
  f.variables = {"c"};
  f.expr = g / (3 * (3 - 2 * g)) + 2 * c * omg - (c + sqr(omg) / 3);
  f.domain = {range(Rational(1, 4), Rational(297, 1000))};
  f.cells = {f.domain};
  return f;
}

CertifiedFunction make_k() {
  const Expr c = Expr::var(0);
  const Expr g = g_expr(c);
  const Expr omg = one_minus_g_expr(c);
  CertifiedFunction f;
  f.id = "k";
  f.variables = {"c"};
  f.expr = c + omg / 6 - (g / (18 * omg) + omg / (3 - 2 * g));
  f.domain = {range(Rational(1, 4), Rational(5, 18))};
  f.cells = {f.domain};
  f.sign = Sign::Negative;
  return f;
}

CertifiedFunction make_ell() {
  const Expr c = Expr::var(0);
  const Expr x = Expr::var(1);
  const Expr g = g_expr(c);
  const Expr omg = one_minus_g_expr(c);
  const Expr top = sqr(g - x) + 2 * sqr(omg);
  const Rational& d = collar_width();
  const Rational third(1, 3);
  const Rational half(1, 2);
  CertifiedFunction f;
  f.id = "ell";
  f.variables = {"c", "x"};
  f.expr = top / (18 * x * (1 - 2 * x)) - sqr(omg) / (6 * x) + q(1, 6) - c;
  f.domain = {range(Rational(1, 4), third), range(Rational(0), half)};
  f.cells = {{range(Rational(1, 4), third), range(d, half - d)}};
  f.margin = Rational(3, 1000);
  // Near x = 0 the 1/x coefficient is 2g - 1 > 0.
  f.collars.push_back({"x_low",
                       {range(Rational(1, 4), third), range(Rational(0), d)},
                       (2 * g - 1) + x * (x - 2 * g + 6 * sqr(omg)),
                       18 * x * (1 - 2 * x),
                       q(1, 6) - c,
                       "x -> 0"});
  // Near x = 1/2 the numerator (g - x)^2 + 2(1 - g)^2 stays positive.
  f.collars.push_back({"x_high",
                       {range(Rational(1, 4), third), range(half - d, half)},
                       top / (18 * x),
                       1 - 2 * x,
                       -sqr(omg) / (6 * x) + q(1, 6) - c,
                       "x -> 1/2"});
  return f;
}

CertifiedFunction make_m() {
  const Expr x = Expr::var(0);
  const Expr c = Expr::var(1);
  const Expr omg = one_minus_g_expr(c);
  // 1 - 2(g(c) - x), written so that it is visibly non-negative for x >= 1/2.
  const Expr e = (2 * x - 1) + 2 * omg;
  const Rational& d = collar_width();
  const Rational third(1, 3);
  const Rational half(1, 2);
  CertifiedFunction f;
  f.id = "m";
  f.variables = {"x", "c"};
  f.expr = (1 + 1 / e - 1 / x) * x / (1 - x) + 1 / e + 2 * omg / (x * (1 - x)) + 1 -
           3 * (1 - x) * omg / x - 18 * c;
  f.domain = {range(half, Rational(1)), range(Rational(1, 4), third)};
  f.cells = {{range(half + d, 1 - d), range(Rational(1, 4), third)},
             {range(half, half + d), range(Rational(1, 4), third - d)}};
  f.margin = Rational(99, 1000);
  f.collars.push_back({"x_one",
                       {range(1 - d, Rational(1)), range(Rational(1, 4), third)},
                       (1 + 1 / e) * x - 1 + 2 * omg / x,
                       1 - x,
                       1 / e + 1 - 3 * (1 - x) * omg / x - 18 * c,
                       "x -> 1"});
  f.collars.push_back({"corner",
                       {range(half, half + d), range(third - d, third)},
                       1 / (1 - x),
                       e,
                       (1 - 1 / x) * x / (1 - x) + 2 * omg / (x * (1 - x)) + 1 - 3 * (1 - x) * omg / x - 18 * c,
                       "1 - 2(g(c) - x) -> 0"});
  return f;
}

CertifiedFunction make_quad_min() {
  const Expr l = Expr::var(0);
  CertifiedFunction f;
  f.id = "quad_min";
  f.variables = {"lambda"};
  f.expr = (88 * l - 73 * sqr(l) - 16) / (256 * sqr(l));
  f.domain = {range(Rational(1, 2), Rational(3, 4))};
  f.cells = {f.domain};
  return f;
}

CertifiedFunction make_case1_poly() {
  const Expr c = Expr::var(0);
  CertifiedFunction f;
  f.id = "case1_poly";
  f.variables = {"c"};
  f.expr = q(4, 13) * c + q(111, 104) * sqr(c) - q(9, 4) * sqr(c);
  f.domain = {range(Rational(1, 100), Rational(26, 100))};
  f.cells = {f.domain};
  return f;
}

const std::map<std::string, CertifiedFunction>& registry() {
  static const std::map<std::string, CertifiedFunction> r = [] {
    std::map<std::string, CertifiedFunction> m;
    for (auto f : {make_g(), make_h(), make_k(), make_ell(), make_m(), make_quad_min(), make_case1_poly()})
      m.emplace(f.id, f);
    return m;
  }();
  return r;
}

}  // namespace

const char* to_string(Sign s) { return s == Sign::Positive ? "positive" : "negative"; }

Sign parse_sign(const std::string& s) {
  if (s == "positive") return Sign::Positive;
  if (s == "negative") return Sign::Negative;
  throw ParseError("unknown sign '" + s + "'");
}

const Rational& collar_width() {
  static const Rational d(1, 10000);
  return d;
}

Expr g_expr(const Expr& c) { return 1 / (3 * (1 - 2 * c)); }

// 1 - g = 2(1 - 3c) / (3(1 - 2c)); the clamp only removes rounding below 0
// since 1 - 3c >= 0 on every domain used.
Expr one_minus_g_expr(const Expr& c) { return 2 * clamp_nonneg(1 - 3 * c) / (3 * (1 - 2 * c)); }

const CertifiedFunction& certified_function(const std::string& id) {
  auto it = registry().find(id);
  if (it == registry().end()) throw PreconditionError("unknown function '" + id + "'");
  return it->second;
}

std::vector<std::string> certified_function_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, f] : registry()) ids.push_back(id);
  return ids;
}

Box enclosure_box(const std::vector<RationalRange>& ranges) {
  Box b;
  for (const auto& r : ranges) b.push_back(r.enclosure());
  return b;
}

}  // namespace sparsehalf
