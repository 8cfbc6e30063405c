#include "sparsehalf/serialize.hpp"

#include "json.hpp"

namespace sparsehalf {
namespace {

using nlohmann::json;

json rational_json(const Rational& q) {
  return {{"num", boost::multiprecision::numerator(q).str()}, {"den", boost::multiprecision::denominator(q).str()}};
}

json subset_json(const VertexSubset& s) {
  json a = json::array();
  for (Vertex v : s.members()) a.push_back(v);
  return a;
}

json outcome_json(const SelectionOutcome& o) {
  return {{"subset", subset_json(o.subset)},
          {"size", o.subset.size()},
          {"achieved", o.achieved},
          {"analytic_bound", rational_json(o.analytic_bound)},
          {"route", o.route},
          {"guarantee_flag", to_string(o.guarantee)}};
}

json oracle_json(const OracleResult& r, std::size_t k) {
  return {{"k", k},
          {"minimum", r.minimum},
          {"witness", subset_json(r.witness)},
          {"subsets_examined", r.subsets_examined},
          {"pruned", r.pruned}};
}

}  // namespace

std::string to_json(const SelectionOutcome& o) { return outcome_json(o).dump(); }

std::string to_json(const OracleResult& r, std::size_t k) { return oracle_json(r, k).dump(); }

std::string to_json(const SparseHalfResult& r) {
  json j = outcome_json(r.best);
  j["target"] = r.target;
  j["verdict"] = to_string(r.verdict);
  j["c"] = rational_json(r.c);
  j["regular"] = r.regular;
  json attempts = json::array();
  for (const auto& a : r.attempts) {
    json e{{"route", a.route}};
    if (a.outcome)
      e["outcome"] = outcome_json(*a.outcome);
    else
      e["skipped"] = a.skipped;
    attempts.push_back(std::move(e));
  }
  j["attempts"] = std::move(attempts);
  if (r.oracle) j["oracle"] = oracle_json(*r.oracle, r.target);
  return j.dump();
}

std::string to_json(const ExtremalReport& r) {
  return json{{"verdict", to_string(r.verdict)},
              {"k", r.k},
              {"minimum", r.minimum},
              {"threshold", rational_json(r.threshold)},
              {"structure_matches", r.structure_matches},
              {"witness", subset_json(r.witness)},
              {"reproducer", r.reproducer}}
      .dump();
}

std::string to_json(const BipartiteSplit& s) {
  return json{{"a", subset_json(s.a)},
              {"b", subset_json(s.b)},
              {"removed", s.removed},
              {"bound", rational_json(s.bound)},
              {"within_bound", s.within_bound}}
      .dump();
}

std::string to_json(const ClosedFormCheck& c) {
  return json{{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}}.dump();
}

}  // namespace sparsehalf
