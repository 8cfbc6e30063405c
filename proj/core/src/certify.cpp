#include "sparsehalf/certify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <map>
#include <set>

#include "json.hpp"

#include "sparsehalf/errors.hpp"

namespace sparsehalf {
namespace {

using nlohmann::json;

// Boxes narrower than this fraction of the domain are left undecided.
constexpr double kMinRelativeWidth = 1e-12;

struct Target {
  Sign sign;
  double margin_hi;  // upward enclosure of the margin

  bool passes(const Interval& v) const {
    return sign == Sign::Positive ? v.lo > margin_hi : v.hi < -margin_hi;
  }
  // The claim is false somewhere on the box.
  bool refuted(const Interval& v) const {
    return sign == Sign::Positive ? v.hi <= margin_hi && !v.is_entire() : v.lo >= -margin_hi && !v.is_entire();
  }
};

Target make_target(Sign s, const Rational& margin) { return {s, Interval::enclose(margin).hi}; }

std::vector<double> domain_widths(const std::vector<RationalRange>& domain) {
  std::vector<double> w;
  for (const auto& r : domain) w.push_back(to_double(r.hi - r.lo));
  return w;
}

// Widest dimension relative to the domain; ties to the lowest index.
// Returns nullopt when the box is too narrow to split.
std::optional<std::size_t> split_dimension(const Box& b, const std::vector<double>& widths) {
  std::size_t best = 0;
  double best_rel = -1.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const double rel = widths[i] > 0.0 ? b[i].width() / widths[i] : 0.0;
    if (rel > best_rel) {
      best_rel = rel;
      best = i;
    }
  }
  if (best_rel < kMinRelativeWidth) return std::nullopt;
  const double m = b[best].mid();
  if (!(b[best].lo < m && m < b[best].hi)) return std::nullopt;
  return best;
}

std::pair<Box, Box> split(const Box& b, std::size_t dim) {
  const double m = b[dim].mid();
  Box left = b, right = b;
  left[dim].hi = m;
  right[dim].lo = m;
  return {left, right};
}

Interval evaluate(const Expr& e, const Box& b, const Interval& parent) {
  Interval v = enclose(e, b);
  // Sound: the range over a child lies in the range over its parent.
  if (!parent.is_entire()) v = intersect(v, parent);
  return v;
}

CollarResult evaluate_collar(const Collar& c, const Target& t) {
  CollarResult r;
  r.name = c.name;
  r.locus = c.locus;
  r.range = c.range;
  const Box b = enclosure_box(c.range);
  r.numerator = enclose(c.numerator, b);
  r.denominator = enclose(c.denominator, b);
  r.remainder = enclose(c.remainder, b);
  if (r.numerator.lo > 0.0 && r.denominator.hi > 0.0 && std::isfinite(r.denominator.hi) &&
      !r.remainder.is_entire()) {
    r.lower = round_down(round_down(r.numerator.lo / r.denominator.hi) + r.remainder.lo);
    r.passed = t.sign == Sign::Positive && r.lower > t.margin_hi;
  } else {
    r.lower = -HUGE_VAL;
  }
  return r;
}

using BoxKey = std::vector<std::uint64_t>;

BoxKey key_of(const Box& b) {
  BoxKey k;
  for (const auto& iv : b) {
    k.push_back(std::bit_cast<std::uint64_t>(iv.lo));
    k.push_back(std::bit_cast<std::uint64_t>(iv.hi));
  }
  return k;
}

bool same_ranges(const std::vector<RationalRange>& a, const std::vector<RationalRange>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].lo != b[i].lo || a[i].hi != b[i].hi) return false;
  return true;
}

std::string ranges_str(const std::vector<RationalRange>& rs) {
  std::string s;
  for (const auto& r : rs) s += "[" + to_string(r.lo) + ", " + to_string(r.hi) + "]";
  return s;
}

}  // namespace

const char* to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Proved: return "proved";
    case CertStatus::Failed: return "failed";
    case CertStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "failed";
}

CertStatus parse_cert_status(const std::string& s) {
  if (s == "proved") return CertStatus::Proved;
  if (s == "failed") return CertStatus::Failed;
  if (s == "budget_exhausted") return CertStatus::BudgetExhausted;
  throw ParseError("unknown certificate status '" + s + "'");
}

SignCertificate certify_sign(const CertifiedFunction& f, const CertifyOptions& opts) {
  SignCertificate cert;
  cert.function = f.id;
  cert.variables = f.variables;
  cert.sign = f.sign;
  cert.margin = opts.margin.value_or(f.margin);
  if (cert.margin < 0) throw PreconditionError("margin must be non-negative");
  if (opts.domain) {
    if (!f.collars.empty()) throw PreconditionError("function '" + f.id + "' has a fixed domain");
    if (opts.domain->size() != f.arity()) throw PreconditionError("domain arity mismatch");
    for (const auto& r : *opts.domain)
      if (!(r.lo < r.hi)) throw PreconditionError("empty domain range");
    cert.domain = *opts.domain;
    cert.cells = {cert.domain};
  } else {
    cert.domain = f.domain;
    cert.cells = f.cells;
  }
  const Target target = make_target(cert.sign, cert.margin);
  const auto widths = domain_widths(cert.domain);

  bool collars_ok = true;
  for (const auto& c : f.collars) {
    cert.collars.push_back(evaluate_collar(c, target));
    ++cert.boxes_evaluated;
    collars_ok = collars_ok && cert.collars.back().passed;
  }

  struct Pending {
    Box box;
    Interval parent;
  };
  std::vector<Pending> stack;
  for (auto it = cert.cells.rbegin(); it != cert.cells.rend(); ++it)
    stack.push_back({enclosure_box(*it), Interval::entire()});

  while (!stack.empty()) {
    if (cert.boxes_evaluated >= opts.budget) {
      for (auto& p : stack) cert.undecided.push_back(std::move(p.box));
      cert.status = CertStatus::BudgetExhausted;
      return cert;
    }
    Pending p = std::move(stack.back());
    stack.pop_back();
    const Interval v = evaluate(f.expr, p.box, p.parent);
    ++cert.boxes_evaluated;
    if (target.passes(v)) {
      cert.boxes.push_back({std::move(p.box), v});
      continue;
    }
    if (target.refuted(v)) {
      cert.undecided.push_back(std::move(p.box));
      continue;
    }
    const auto dim = split_dimension(p.box, widths);
    if (!dim) {
      cert.undecided.push_back(std::move(p.box));
      continue;
    }
    auto [left, right] = split(p.box, *dim);
    stack.push_back({std::move(right), v});
    stack.push_back({std::move(left), v});
  }
  cert.status = cert.undecided.empty() && collars_ok ? CertStatus::Proved : CertStatus::Failed;
  return cert;
}

double certified_extreme(const SignCertificate& cert) {
  if (cert.boxes.empty()) throw PreconditionError("certificate has no boxes");
  double best = cert.sign == Sign::Positive ? HUGE_VAL : -HUGE_VAL;
  for (const auto& b : cert.boxes)
    best = cert.sign == Sign::Positive ? std::min(best, b.bound.lo) : std::max(best, b.bound.hi);
  return best;
}

bool tiles_domain(const std::vector<RationalRange>& domain, const std::vector<std::vector<RationalRange>>& pieces) {
  const std::size_t dims = domain.size();
  std::vector<std::vector<Rational>> cuts(dims);
  for (std::size_t i = 0; i < dims; ++i) {
    if (!(domain[i].lo < domain[i].hi)) return false;
    std::set<Rational> s{domain[i].lo, domain[i].hi};
    for (const auto& p : pieces) {
      if (p.size() != dims) return false;
      if (!(p[i].lo < p[i].hi) || p[i].lo < domain[i].lo || p[i].hi > domain[i].hi) return false;
      s.insert(p[i].lo);
      s.insert(p[i].hi);
    }
    cuts[i].assign(s.begin(), s.end());
  }
  // Every grid cell must be covered by exactly one piece.
  std::vector<std::size_t> idx(dims, 0);
  while (true) {
    std::size_t covering = 0;
    for (const auto& p : pieces) {
      bool inside = true;
      for (std::size_t i = 0; i < dims && inside; ++i)
        inside = p[i].lo <= cuts[i][idx[i]] && cuts[i][idx[i] + 1] <= p[i].hi;
      covering += inside;
    }
    if (covering != 1) return false;
    std::size_t d = 0;
    while (d < dims && ++idx[d] + 1 == cuts[d].size()) idx[d++] = 0;
    if (d == dims) return true;
  }
}

ReplayReport replay(const SignCertificate& cert) {
  ReplayReport rep;
  auto problem = [&](std::string s) { rep.problems.push_back(std::move(s)); };

  const CertifiedFunction* fn = nullptr;
  try {
    fn = &certified_function(cert.function);
  } catch (const PreconditionError& e) {
    problem(e.what());
    return rep;
  }
  if (cert.sign != fn->sign) problem("sign differs from the registry");
  if (cert.variables != fn->variables) problem("variables differ from the registry");
  if (cert.domain.size() != fn->arity()) {
    problem("domain arity differs from the registry");
    return rep;
  }
  if (!fn->collars.empty()) {
    if (!same_ranges(cert.domain, fn->domain)) problem("domain differs from the registry: " + ranges_str(cert.domain));
    if (cert.collars.size() != fn->collars.size()) problem("collar count differs from the registry");
  } else if (!cert.collars.empty()) {
    problem("unexpected collars");
  }
  if (cert.status != CertStatus::Proved) problem(std::string("recorded status is ") + to_string(cert.status));
  if (cert.margin < 0) problem("negative margin");

  const Target target = make_target(cert.sign, cert.margin);
  std::vector<std::vector<RationalRange>> pieces = cert.cells;
  for (std::size_t i = 0; i < cert.collars.size() && i < fn->collars.size(); ++i) {
    const Collar& ref = fn->collars[i];
    const CollarResult& got = cert.collars[i];
    if (got.name != ref.name || !same_ranges(got.range, ref.range)) {
      problem("collar " + std::to_string(i) + " differs from the registry");
      continue;
    }
    pieces.push_back(ref.range);
    const CollarResult again = evaluate_collar(ref, target);
    ++rep.boxes_checked;
    if (!again.passed) problem("collar " + ref.name + " does not clear the margin");
  }
  if (!tiles_domain(cert.domain, pieces)) problem("cells and collars do not tile the domain");

  std::map<BoxKey, std::size_t> stored;
  for (std::size_t i = 0; i < cert.boxes.size(); ++i)
    if (!stored.emplace(key_of(cert.boxes[i].box), i).second) problem("duplicate box");
  std::vector<bool> used(cert.boxes.size(), false);

  const auto widths = domain_widths(cert.domain);
  struct Pending {
    Box box;
    Interval parent;
  };
  std::vector<Pending> stack;
  for (const auto& cell : cert.cells) stack.push_back({enclosure_box(cell), Interval::entire()});
  while (!stack.empty() && rep.problems.size() < 16) {
    Pending p = std::move(stack.back());
    stack.pop_back();
    const Interval v = evaluate(fn->expr, p.box, p.parent);
    auto it = stored.find(key_of(p.box));
    if (it != stored.end()) {
      used[it->second] = true;
      ++rep.boxes_checked;
      if (!target.passes(v)) problem("box " + std::to_string(it->second) + " does not clear the margin on replay");
      // The stored bound must be implied by the recomputed enclosure.
      if (!cert.boxes[it->second].bound.contains(v))
        problem("box " + std::to_string(it->second) + " bound is not reproduced");
      continue;
    }
    const auto dim = split_dimension(p.box, widths);
    if (!dim) {
      problem("uncovered box at the split limit");
      continue;
    }
    auto [left, right] = split(p.box, *dim);
    stack.push_back({std::move(right), v});
    stack.push_back({std::move(left), v});
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) {
      problem("box " + std::to_string(i) + " is not reached from the cells");
      break;
    }
  rep.proved = rep.problems.empty();
  return rep;
}

namespace {

json ranges_to_json(const std::vector<RationalRange>& rs) {
  json a = json::array();
  for (const auto& r : rs) a.push_back({{"lo", to_string(r.lo)}, {"hi", to_string(r.hi)}});
  return a;
}

std::vector<RationalRange> ranges_from_json(const json& a) {
  std::vector<RationalRange> rs;
  for (const auto& r : a) rs.push_back({Rational(r.at("lo").get<std::string>()), Rational(r.at("hi").get<std::string>())});
  return rs;
}

json interval_to_json(const Interval& v) { return json::array({to_hex(v.lo), to_hex(v.hi)}); }

Interval interval_from_json(const json& a) {
  if (!a.is_array() || a.size() != 2) throw ParseError("interval must be a pair");
  return {from_hex(a[0].get<std::string>()), from_hex(a[1].get<std::string>())};
}

json box_to_json(const Box& b) {
  json lo = json::array(), hi = json::array();
  for (const auto& v : b) {
    lo.push_back(to_hex(v.lo));
    hi.push_back(to_hex(v.hi));
  }
  return {{"lo", lo}, {"hi", hi}};
}

Box box_from_json(const json& j) {
  const auto& lo = j.at("lo");
  const auto& hi = j.at("hi");
  if (lo.size() != hi.size()) throw ParseError("box corner arity mismatch");
  Box b;
  for (std::size_t i = 0; i < lo.size(); ++i)
    b.push_back({from_hex(lo[i].get<std::string>()), from_hex(hi[i].get<std::string>())});
  return b;
}

}  // namespace

std::string certificate_to_json(const SignCertificate& cert) {
  json j;
  j["function"] = cert.function;
  j["variables"] = cert.variables;
  j["domain"] = ranges_to_json(cert.domain);
  j["sign"] = to_string(cert.sign);
  j["margin"] = to_string(cert.margin);
  json cells = json::array();
  for (const auto& c : cert.cells) cells.push_back(ranges_to_json(c));
  j["cells"] = cells;
  json boxes = json::array();
  for (const auto& b : cert.boxes) {
    json e = box_to_json(b.box);
    e["bound"] = interval_to_json(b.bound);
    boxes.push_back(std::move(e));
  }
  j["boxes"] = std::move(boxes);
  json collars = json::array();
  for (const auto& c : cert.collars)
    collars.push_back({{"name", c.name},
                       {"locus", c.locus},
                       {"range", ranges_to_json(c.range)},
                       {"numerator", interval_to_json(c.numerator)},
                       {"denominator", interval_to_json(c.denominator)},
                       {"remainder", interval_to_json(c.remainder)},
                       {"lower", to_hex(c.lower)},
                       {"passed", c.passed}});
  j["collars"] = std::move(collars);
  json undecided = json::array();
  for (const auto& b : cert.undecided) undecided.push_back(box_to_json(b));
  j["undecided"] = std::move(undecided);
  j["status"] = to_string(cert.status);
  j["boxes_evaluated"] = cert.boxes_evaluated;
  return j.dump();
}

SignCertificate certificate_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
  try {
    SignCertificate c;
    c.function = j.at("function").get<std::string>();
    c.variables = j.at("variables").get<std::vector<std::string>>();
    c.domain = ranges_from_json(j.at("domain"));
    c.sign = parse_sign(j.at("sign").get<std::string>());
    c.margin = Rational(j.at("margin").get<std::string>());
    for (const auto& cell : j.at("cells")) c.cells.push_back(ranges_from_json(cell));
    for (const auto& b : j.at("boxes")) c.boxes.push_back({box_from_json(b), interval_from_json(b.at("bound"))});
    for (const auto& k : j.at("collars")) {
      CollarResult r;
      r.name = k.at("name").get<std::string>();
      r.locus = k.at("locus").get<std::string>();
      r.range = ranges_from_json(k.at("range"));
      r.numerator = interval_from_json(k.at("numerator"));
      r.denominator = interval_from_json(k.at("denominator"));
      r.remainder = interval_from_json(k.at("remainder"));
      r.lower = from_hex(k.at("lower").get<std::string>());
      r.passed = k.at("passed").get<bool>();
      c.collars.push_back(std::move(r));
    }
    for (const auto& b : j.value("undecided", json::array())) c.undecided.push_back(box_from_json(b));
    c.status = parse_cert_status(j.at("status").get<std::string>());
    c.boxes_evaluated = j.value("boxes_evaluated", std::uint64_t{0});
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw ParseError(std::string("certificate: ") + e.what());
  }
}

}  // namespace sparsehalf
