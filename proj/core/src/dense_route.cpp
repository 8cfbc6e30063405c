#include "sparsehalf/dense_route.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include "sparsehalf/derandomize.hpp"
#include "sparsehalf/errors.hpp"
#include "sparsehalf/local_density.hpp"
#include "sparsehalf/structure.hpp"

namespace sparsehalf {
namespace {

struct Branch {
  VertexSubset subset;  // ids of H (= ids of G)
  Rational bound;       // upper bound on e_H(subset)
  std::string route;
};

VertexSubset lift(const VertexSubset& s, const std::vector<Vertex>& ids, std::size_t n) {
  VertexSubset out(n);
  s.bits().for_each([&](Vertex v) { out.insert(ids[v]); });
  return out;
}

VertexSubset lowest(const VertexSubset& s, std::size_t count) {
  VertexSubset out(s.universe());
  for (Vertex v : s.members()) {
    if (out.size() == count) break;
    out.insert(v);
  }
  return out;
}

std::optional<Branch> join_branch(const Graph& h) {
  auto split = join_decompose(h);
  if (!split || !is_triangle_free(split->gamma)) return std::nullopt;
  const std::size_t n = h.n();
  const std::size_t half = n / 2;
  const Graph& gamma = split->gamma;
  const std::size_t m = gamma.n();
  const std::size_t i_size = split->independent.size();

  if (i_size >= half) return Branch{lowest(split->independent, half), Rational(0), "dense:independent"};

  if (3 * m > 2 * n) {
    // Restrict Gamma so that half / |Gamma'| >= 3/5.
    const std::size_t cap = 5 * half / 3;
    VertexSubset keep = VertexSubset::full(m);
    if (m > cap) keep = lowest(keep, cap);
    std::vector<Vertex> sub_ids;
    Graph sub = gamma.induced(keep, &sub_ids);
    const Rational alpha(static_cast<std::int64_t>(half), static_cast<std::int64_t>(sub.n()));
    SelectionOutcome k = krivelevich_select(sub, alpha);
    VertexSubset in_gamma(m);
    k.subset.bits().for_each([&](Vertex v) { in_gamma.insert(sub_ids[v]); });
    return Branch{lift(in_gamma, split->gamma_ids, n), k.analytic_bound, "dense:krivelevich"};
  }

  const Rational c_gamma = gamma.density();
  if (c_gamma < Rational(2, 9)) {
    SelectionOutcome u = derandomized_uniform_subset(gamma, half);
    return Branch{lift(u.subset, split->gamma_ids, n), u.analytic_bound, "dense:uniform"};
  }

  const std::size_t need = half - i_size;
  Vertex top = 0;
  for (Vertex v = 1; v < m; ++v)
    if (gamma.degree(v) > gamma.degree(top)) top = v;
  if (gamma.degree(top) < need) return std::nullopt;
  VertexSubset t = lowest(gamma.neighbors(top), need);
  VertexSubset s = split->independent | lift(t, split->gamma_ids, n);
  return Branch{std::move(s), Rational(static_cast<std::int64_t>(i_size * need)), "dense:join"};
}

std::optional<Branch> independent_branch(const Graph& h) {
  const std::size_t n = h.n();
  const std::size_t half = n / 2;
  const std::size_t target = static_cast<std::size_t>(ceil(Rational(9 * static_cast<std::int64_t>(n), 25)));
  if (target == 0 || target > half) return std::nullopt;
  auto a = independent_set_search(h, target);
  if (!a) return std::nullopt;
  SelectionOutcome ext = derandomized_extension(h, *a, half - target);
  return Branch{std::move(ext.subset), std::move(ext.analytic_bound), "dense:independent_extension"};
}

}  // namespace

SelectionOutcome dense_route(const Graph& g) {
  const std::size_t n = g.n();
  const Graph h = maximalize_k4free(g);
  std::optional<Branch> branch = join_branch(h);
  if (!branch) branch = independent_branch(h);
  if (!branch) throw PreconditionError("dense route: no branch applies");

  SelectionOutcome out;
  out.subset = std::move(branch->subset);
  out.analytic_bound = std::move(branch->bound);
  out.achieved = edges_within(g, out.subset);
  out.route = std::move(branch->route);
  const bool hypothesis = 100 * g.min_degree() >= 59 * n;
  const bool within = compare_with_n2_over_18(out.achieved, n) != HalfVerdict::Exceeds;
  out.guarantee = !hypothesis ? Guarantee::HypothesisUnmet : within ? Guarantee::Held : Guarantee::Missed;
  return out;
}

}  // namespace sparsehalf
