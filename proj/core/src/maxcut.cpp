#include "sparsehalf/maxcut.hpp"

#include <bit>
#include <random>
#include <vector>

#include "sparsehalf/derandomize.hpp"
#include "sparsehalf/errors.hpp"

namespace sparsehalf {
namespace {

using Mask = std::uint64_t;

MaxCutResult from_side(const Graph& g, const VertexSubset& a, bool exact) {
  MaxCutResult r;
  r.a = a;
  r.b = a.complement();
  r.cut = edges_between(g, r.a, r.b);
  r.exact = exact;
  r.sudakov_floor = sudakov_floor(g);
  return r;
}

// Gray-code sweep over all sides containing vertex n-1 in B.
VertexSubset exact_cut(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<Mask> adj(n, 0);
  for (Vertex v = 0; v < n; ++v) g.row(v).for_each([&](Vertex w) { adj[v] |= Mask{1} << w; });
  const std::size_t free_bits = n - 1;
  Mask side = 0;
  std::int64_t cut = 0;
  std::int64_t best = 0;
  Mask best_side = 0;
  const std::uint64_t total = std::uint64_t{1} << free_bits;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int v = std::countr_zero(i);
    const Mask bit = Mask{1} << v;
    // Moving v across the cut turns same-side neighbours into cut edges.
    const std::int64_t same = std::popcount(adj[v] & ((side & bit) ? side : ~side & ~bit));
    const std::int64_t cross = std::popcount(adj[v]) - same;
    cut += same - cross;
    side ^= bit;
    if (cut > best) {
      best = cut;
      best_side = side;
    }
  }
  VertexSubset a(n);
  for (Vertex v = 0; v < free_bits; ++v)
    if (best_side >> v & 1) a.insert(v);
  return a;
}

VertexSubset local_search_cut(const Graph& g, const MaxCutOptions& opts) {
  const std::size_t n = g.n();
  std::mt19937_64 rng(opts.seed);
  VertexSubset best(n);
  std::uint64_t best_cut = 0;
  for (std::size_t round = 0; round < std::max<std::size_t>(opts.restarts, 1); ++round) {
    VertexSubset a(n);
    for (Vertex v = 0; v < n; ++v)
      if (rng() & 1) a.insert(v);
    bool moved = true;
    while (moved) {
      moved = false;
      for (Vertex v = 0; v < n; ++v) {
        const std::size_t in_a = g.row(v).count_and(a.bits());
        const std::size_t same = a.contains(v) ? in_a : g.degree(v) - in_a;
        if (2 * same > g.degree(v)) {
          if (a.contains(v))
            a.erase(v);
          else
            a.insert(v);
          moved = true;
        }
      }
    }
    const std::uint64_t cut = edges_between(g, a, a.complement());
    if (round == 0 || cut > best_cut) {
      best_cut = cut;
      best = a;
    }
  }
  return best;
}

}  // namespace

Rational sudakov_floor(const Graph& g) {
  if (g.n() == 0) return Rational(0);
  const Rational e(static_cast<std::int64_t>(g.edge_count()));
  const Rational n2(static_cast<std::int64_t>(g.n() * g.n()));
  return Rational(4, 13) * e + Rational(111, 104) * e * e / n2;
}

MaxCutResult max_cut_search(const Graph& g, const MaxCutOptions& opts) {
  const std::size_t n = g.n();
  if (n <= 1) return from_side(g, VertexSubset(n), true);
  if (n <= opts.exact_threshold && n <= 40) return from_side(g, exact_cut(g), true);
  return from_side(g, local_search_cut(g, opts), false);
}

SelectionOutcome sparse_half_from_cut(const Graph& g, const VertexSubset& a_in) {
  const std::size_t n = g.n();
  if (a_in.universe() != n) throw PreconditionError("cut side universe does not match graph");
  const VertexSubset a = a_in.size() * 2 <= n ? a_in : a_in.complement();
  const VertexSubset b = a.complement();
  const std::size_t half = n / 2;

  PoolQuota inside{b, half};
  auto in_b = conditional_expectation_select(g, VertexSubset(n), std::span(&inside, 1));
  SelectionOutcome best;
  best.subset = std::move(in_b.subset);
  best.achieved = in_b.achieved;
  best.analytic_bound = in_b.expectation;
  best.expectation_trace = std::move(in_b.trace);
  best.route = "cut:inside";

  if (a.size() <= half) {
    SelectionOutcome ext = derandomized_extension(g, a, half - a.size());
    ext.route = "cut:extend";
    if (better_outcome(ext, best)) best = std::move(ext);
  }

  const Rational c = g.density();
  const Rational n2(static_cast<std::int64_t>(n * n));
  const Rational cut(static_cast<std::int64_t>(edges_between(g, a, b)));
  const bool hypothesis = cut > Rational(9, 4) * c * c * n2;
  const bool strict = Rational(static_cast<std::int64_t>(18 * best.achieved)) < n2;
  best.guarantee = !hypothesis ? Guarantee::HypothesisUnmet : strict ? Guarantee::Held : Guarantee::Missed;
  return best;
}

}  // namespace sparsehalf
