#pragma once

#include <string>

#include "sparsehalf/rational.hpp"

namespace sparsehalf {

/// Closed interval of binary64 values. Each endpoint is the round-to-nearest
/// result moved one ulp outward when, and only when, an error-free residual
/// shows it was inexact in that direction; the result encloses the exact
/// range and is at most one ulp wider than it at each end.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval point(double v) { return {v, v}; }
  static Interval entire();
  /// Outward enclosure of an exact rational.
  static Interval enclose(const Rational& q);

  bool is_entire() const;
  bool contains(double v) const { return lo <= v && v <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  double width() const { return hi - lo; }
  double mid() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

double round_down(double v);
double round_up(double v);

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
/// Division by an interval containing zero yields the entire line.
Interval operator/(const Interval& a, const Interval& b);

/// {x^2 : x in a}, tighter than a * a when a straddles zero.
Interval sqr(const Interval& a);
/// {max(x, 0) : x in a}.
Interval clamp_nonneg(const Interval& a);
Interval hull(const Interval& a, const Interval& b);
/// Intersection; callers guarantee overlap.
Interval intersect(const Interval& a, const Interval& b);

/// Lossless hexadecimal floating notation ("%a").
std::string to_hex(double v);
double from_hex(const std::string& s);

}  // namespace sparsehalf
