#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sparsehalf {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational ratio(std::int64_t num, std::int64_t den) { return Rational(num, den); }

inline std::string to_string(const Rational& q) { return q.str(); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline BigInt floor(const Rational& q) {
  BigInt n = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);
  BigInt f = n / d;
  if (n < 0 && f * d != n) --f;
  return f;
}

inline BigInt ceil(const Rational& q) { return -floor(-q); }

/// Thresholds used by the route dispatch, kept exact so comparisons never
/// depend on rounding.
namespace thresholds {
inline const Rational kSparseDensity{26, 100};    // e(G) <= 0.26 n^2
inline const Rational kDenseDensity{295, 1000};   // e(G) >= 0.295 n^2 (regular)
inline const Rational kMediumDensity{297, 1000};  // e(G) <= 0.297 n^2
inline const Rational kDenseMinDegree{59, 100};   // delta(G) >= 0.59 n
inline const Rational kHalfEdgeFraction{1, 18};   // n^2/18
inline const Rational kBipartiteRemoval{1, 9};    // n^2/9
inline const Rational kDenseIndependent{9, 25};   // |A| >= 9n/25
inline const Rational kLambda{8, 13};
}  // namespace thresholds

}  // namespace sparsehalf
