#include "sparsehalf/schemes.hpp"

#include <algorithm>
#include <string>

#include "sparsehalf/derandomize.hpp"
#include "sparsehalf/errors.hpp"

namespace sparsehalf {
namespace {

constexpr Quota Z = Quota::Zero;
constexpr Quota F = Quota::Full;
constexpr Quota R = Quota::Rest;

constexpr SchemeRow kTable1[] = {
    {1, 1, {F, R, Z, Z}}, {1, 2, {F, Z, R, Z}}, {1, 3, {Z, F, R, Z}},
    {1, 4, {R, F, Z, Z}}, {1, 5, {R, Z, F, Z}}, {1, 6, {Z, R, F, Z}},
};
constexpr SchemeRow kTable2[] = {
    {2, 1, {F, F, R, Z}}, {2, 2, {F, R, F, Z}}, {2, 3, {R, F, F, Z}},
    {2, 4, {F, Z, Z, R}}, {2, 5, {Z, F, Z, R}}, {2, 6, {Z, Z, F, R}},
};
constexpr SchemeRow kTable3[] = {
    {3, 1, {F, R, Z, Z}}, {3, 2, {F, Z, R, Z}}, {3, 3, {R, F, F, Z}},
    {3, 4, {F, Z, Z, R}}, {3, 5, {R, F, Z, F}}, {3, 6, {R, Z, F, F}},
};
constexpr SchemeRow kTable4[] = {
    {4, 1, {F, R, Z, Z}}, {4, 2, {F, Z, R, Z}}, {4, 3, {F, R, F, Z}}, {4, 4, {R, F, F, Z}},
    {4, 5, {F, Z, Z, R}}, {4, 6, {Z, F, Z, R}}, {4, 7, {R, Z, F, F}}, {4, 8, {Z, R, F, F}},
};

}  // namespace

Rational g_of_c(const Rational& c) {
  if (c * 2 >= 1) throw PreconditionError("g(c) needs c < 1/2");
  return Rational(1) / (3 * (1 - 2 * c));
}

FourPartition FourPartition::build(const Graph& g, std::array<VertexSubset, 3> first_three) {
  const std::size_t n = g.n();
  for (const auto& s : first_three)
    if (s.universe() != n) throw PreconditionError("partition universe does not match graph");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!first_three[i].disjoint(first_three[j])) throw PreconditionError("partition parts overlap");
  std::stable_sort(first_three.begin(), first_three.end(),
                   [](const VertexSubset& a, const VertexSubset& b) { return a.size() > b.size(); });
  FourPartition p;
  VertexSubset rest = VertexSubset::full(n);
  for (int i = 0; i < 3; ++i) {
    rest -= first_three[i];
    p.parts[i] = std::move(first_three[i]);
  }
  p.parts[3] = std::move(rest);
  for (int i = 0; i < 4; ++i) {
    p.x[i] = n ? Rational(static_cast<std::int64_t>(p.parts[i].size()), static_cast<std::int64_t>(n)) : Rational(0);
    p.e[i][i] = edges_within(g, p.parts[i]);
    p.independent[i] = p.e[i][i] == 0;
    for (int j = i + 1; j < 4; ++j) p.e[i][j] = p.e[j][i] = edges_between(g, p.parts[i], p.parts[j]);
  }
  p.g_c = g_of_c(g.density());
  return p;
}

HeaviestTriangle heaviest_triangle(const Graph& g) {
  TriangleStats st = triangle_stats(g);
  if (st.triangles.empty()) throw PreconditionError("heaviest_triangle needs a triangle");
  HeaviestTriangle best;
  bool first = true;
  for (const Triangle& t : st.triangles) {
    const std::uint64_t sum = std::uint64_t{st.codegree(t[0], t[1])} + st.codegree(t[1], t[2]) +
                              st.codegree(t[2], t[0]);
    if (first || sum > best.codegree_sum) {
      best.triangle = t;
      best.codegree_sum = sum;
      first = false;
    }
  }
  auto [u, v, w] = best.triangle;
  best.parts[0] = VertexSubset(g.row(u) & g.row(v));
  best.parts[1] = VertexSubset(g.row(v) & g.row(w));
  best.parts[2] = VertexSubset(g.row(w) & g.row(u));
  return best;
}

std::string SchemeRow::label() const { return "scheme(" + std::to_string(table) + "," + std::to_string(row) + ")"; }

std::span<const SchemeRow> scheme_table(int table) {
  switch (table) {
    case 1: return kTable1;
    case 2: return kTable2;
    case 3: return kTable3;
    case 4: return kTable4;
  }
  throw PreconditionError("scheme tables are numbered 1 to 4");
}

std::optional<std::array<std::size_t, 4>> scheme_quotas(const FourPartition& p, const SchemeRow& row) {
  const std::size_t n = p.parts[0].universe();
  std::array<std::size_t, 4> q{};
  std::size_t full = 0;
  int rest = -1;
  for (int i = 0; i < 4; ++i) {
    if (row.quotas[i] == Quota::Full) {
      q[i] = p.parts[i].size();
      full += q[i];
    } else if (row.quotas[i] == Quota::Rest) {
      rest = i;
    }
  }
  if (full > n / 2) return std::nullopt;
  const std::size_t r = n / 2 - full;
  if (rest < 0) return r == 0 ? std::optional(q) : std::nullopt;
  if (r > p.parts[rest].size()) return std::nullopt;
  q[rest] = r;
  return q;
}

std::optional<SelectionOutcome> scheme_select(const Graph& g, const FourPartition& p, const SchemeRow& row) {
  auto q = scheme_quotas(p, row);
  if (!q) return std::nullopt;
  const std::size_t n = g.n();
  VertexSubset forced(n);
  PoolQuota pool{VertexSubset(n), 0};
  for (int i = 0; i < 4; ++i) {
    if (row.quotas[i] == Quota::Full) forced |= p.parts[i];
    if (row.quotas[i] == Quota::Rest) pool = PoolQuota{p.parts[i], (*q)[i]};
  }
  auto choice = conditional_expectation_select(g, forced, std::span(&pool, 1));
  SelectionOutcome out;
  out.subset = std::move(choice.subset);
  out.analytic_bound = std::move(choice.expectation);
  out.achieved = choice.achieved;
  out.route = row.label();
  out.guarantee = out.achieved <= out.analytic_bound ? Guarantee::Held : Guarantee::Missed;
  out.expectation_trace = std::move(choice.trace);
  return out;
}

MediumRouteResult medium_route_detail(const Graph& g) {
  if (clique_check(g, 4)) throw PreconditionError("medium route needs a K4-free graph");
  MediumRouteResult res;
  res.triangle = heaviest_triangle(g);
  res.partition = FourPartition::build(g, res.triangle.parts);
  const std::size_t n = g.n();
  std::optional<SelectionOutcome> best;
  for (int t = 1; t <= 4; ++t)
    for (const SchemeRow& row : scheme_table(t)) {
      auto out = scheme_select(g, res.partition, row);
      if (out && (!best || better_outcome(*out, *best))) best = std::move(out);
    }
  if (!best) throw PreconditionError("no feasible scheme row");
  const Rational c = g.density();
  const std::size_t three = res.partition.parts[0].size() + res.partition.parts[1].size() +
                            res.partition.parts[2].size();
  res.large_parts = Rational(static_cast<std::int64_t>(three)) >= res.partition.g_c * static_cast<std::int64_t>(n);
  const bool hypothesis = g.is_regular() && c >= Rational(1, 4) && c <= thresholds::kMediumDensity && res.large_parts;
  const bool strict = compare_with_n2_over_18(best->achieved, n) == HalfVerdict::Strict;
  best->guarantee = !hypothesis ? Guarantee::HypothesisUnmet : strict ? Guarantee::Held : Guarantee::Missed;
  res.best = std::move(*best);
  return res;
}

SelectionOutcome medium_route(const Graph& g) { return medium_route_detail(g).best; }

}  // namespace sparsehalf
