#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sparsehalf/functions.hpp"

namespace sparsehalf {

enum class CertStatus { Proved, Failed, BudgetExhausted };

const char* to_string(CertStatus s);
CertStatus parse_cert_status(const std::string& s);

struct CertifiedBox {
  Box box;
  Interval bound;
};

struct CollarResult {
  std::string name;
  std::string locus;
  std::vector<RationalRange> range;
  Interval numerator;
  Interval denominator;
  Interval remainder;
  /// Certified lower bound P_lo / D_hi + R_lo.
  double lower = 0.0;
  bool passed = false;
};

struct SignCertificate {
  std::string function;
  std::vector<std::string> variables;
  std::vector<RationalRange> domain;
  Sign sign = Sign::Positive;
  Rational margin;
  std::vector<std::vector<RationalRange>> cells;
  std::vector<CertifiedBox> boxes;
  std::vector<CollarResult> collars;
  CertStatus status = CertStatus::Failed;
  std::vector<Box> undecided;
  std::uint64_t boxes_evaluated = 0;
};

struct CertifyOptions {
  /// Defaults to the registry margin.
  std::optional<Rational> margin;
  /// Maximum number of box evaluations.
  std::uint64_t budget = 1'000'000;
  /// Replaces the registry domain; only for functions without collars.
  std::optional<std::vector<RationalRange>> domain;
};

/// Bisection until every box of every cell has the target sign beyond the
/// margin. Never reports Proved without full coverage.
SignCertificate certify_sign(const CertifiedFunction& f, const CertifyOptions& opts = {});

/// Tightest certified value over the boxes: the least lower end (positive
/// sign) or the greatest upper end (negative sign).
double certified_extreme(const SignCertificate& cert);

struct ReplayReport {
  bool proved = false;
  std::uint64_t boxes_checked = 0;
  std::vector<std::string> problems;
};

/// Re-derives every box from the cells through the split rule, checks that
/// each stored box is used once, re-evaluates boxes and collars, and checks
/// that cells and collars tile the domain.
ReplayReport replay(const SignCertificate& cert);

/// True when the pieces tile the domain: they cover it and overlap only on
/// boundaries.
bool tiles_domain(const std::vector<RationalRange>& domain, const std::vector<std::vector<RationalRange>>& pieces);

std::string certificate_to_json(const SignCertificate& cert);
SignCertificate certificate_from_json(std::string_view text);

}  // namespace sparsehalf
