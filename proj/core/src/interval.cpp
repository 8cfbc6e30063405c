#include "sparsehalf/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "sparsehalf/errors.hpp"

namespace sparsehalf {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Below this magnitude the residuals below may underflow and stop being exact.
constexpr double kExactFloor = 0x1p-960;

// Round-to-nearest result v with the sign of (exact - v) known: step outward
// only when the result was inexact in the direction that matters.
double directed(double v, double err_sign, bool up) {
  if (err_sign == 0.0) return v;
  if (up) return err_sign > 0.0 ? round_up(v) : v;
  return err_sign < 0.0 ? round_down(v) : v;
}

double fallback(double v, bool up) { return up ? round_up(v) : round_down(v); }

// TwoSum gives the exact rounding error of a + b.
double add_dir(double a, double b, bool up) {
  const double s = a + b;
  if (!std::isfinite(s)) return std::isnan(s) ? s : fallback(s, up);
  const double bb = s - a;
  const double e = (a - (s - bb)) + (b - bb);
  return directed(s, e, up);
}

// fma(a, b, -p) is the exact product residual away from underflow.
double mul_dir(double a, double b, bool up) {
  const double p = a * b;
  if (std::isnan(p)) return p;
  if (a == 0.0 || b == 0.0) return 0.0;
  if (!std::isfinite(p) || std::fabs(p) < kExactFloor) return fallback(p, up);
  return directed(p, std::fma(a, b, -p), up);
}

// a - q b is exact for the rounded quotient q; its sign times sign(b) is the
// sign of a/b - q.
double div_dir(double a, double b, bool up) {
  const double q = a / b;
  if (std::isnan(q)) return q;
  if (a == 0.0 && b != 0.0) return 0.0;
  if (!std::isfinite(q) || std::fabs(q) < kExactFloor || std::fabs(a) < kExactFloor) return fallback(q, up);
  const double r = std::fma(-q, b, a);
  return directed(q, b > 0.0 ? r : -r, up);
}

template <class F>
Interval corners(const Interval& a, const Interval& b, F op) {
  const double xs[] = {a.lo, a.hi};
  const double ys[] = {b.lo, b.hi};
  double lo = kInf;
  double hi = -kInf;
  for (double x : xs)
    for (double y : ys) {
      const double l = op(x, y, false);
      const double h = op(x, y, true);
      if (std::isnan(l) || std::isnan(h)) return Interval::entire();
      lo = std::min(lo, l);
      hi = std::max(hi, h);
    }
  return {lo, hi};
}

}  // namespace

double round_down(double v) { return v == -kInf ? v : std::nextafter(v, -kInf); }
double round_up(double v) { return v == kInf ? v : std::nextafter(v, kInf); }

Interval Interval::entire() { return {-kInf, kInf}; }

Interval Interval::enclose(const Rational& q) {
  const double d = q.convert_to<double>();
  if (!std::isfinite(d)) return {round_down(d), round_up(d)};
  const Rational exact(d);
  if (exact == q) return point(d);
  return exact < q ? Interval{d, round_up(d)} : Interval{round_down(d), d};
}

bool Interval::is_entire() const { return lo == -kInf && hi == kInf; }

double Interval::mid() const {
  if (is_entire()) return 0.0;
  return lo + (hi - lo) / 2;
}

Interval operator+(const Interval& a, const Interval& b) {
  const Interval r{add_dir(a.lo, b.lo, false), add_dir(a.hi, b.hi, true)};
  return std::isnan(r.lo) || std::isnan(r.hi) ? Interval::entire() : r;
}

Interval operator-(const Interval& a, const Interval& b) { return a + -b; }

Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  return corners(a, b, mul_dir);
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0.0 && b.hi >= 0.0) return Interval::entire();
  return corners(a, b, div_dir);
}

Interval sqr(const Interval& a) {
  if (a.lo >= 0.0) return {std::max(0.0, mul_dir(a.lo, a.lo, false)), mul_dir(a.hi, a.hi, true)};
  if (a.hi <= 0.0) return {std::max(0.0, mul_dir(a.hi, a.hi, false)), mul_dir(a.lo, a.lo, true)};
  return {0.0, std::max(mul_dir(a.lo, a.lo, true), mul_dir(a.hi, a.hi, true))};
}

Interval clamp_nonneg(const Interval& a) { return {std::max(a.lo, 0.0), std::max(a.hi, 0.0)}; }

Interval hull(const Interval& a, const Interval& b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

Interval intersect(const Interval& a, const Interval& b) {
  Interval r{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
  if (r.lo > r.hi) return a;  // disjoint only through a bug upstream; keep the sound operand
  return r;
}

std::string to_hex(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

double from_hex(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw ParseError("malformed floating value '" + s + "'");
  return v;
}

}  // namespace sparsehalf
