#include "sparsehalf/local_density.hpp"

#include <string>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "sparsehalf/derandomize.hpp"
#include "sparsehalf/errors.hpp"
#include "sparsehalf/graph6.hpp"
#include "sparsehalf/structure.hpp"

namespace sparsehalf {
namespace {

std::size_t floor_fraction(const Rational& alpha, std::size_t n) {
  return static_cast<std::size_t>(floor(alpha * static_cast<std::int64_t>(n)));
}

void require_unit_interval(const Rational& alpha) {
  if (alpha < 0 || alpha > 1) throw PreconditionError("alpha must lie in [0, 1], got " + to_string(alpha));
}

void require_triangle_free(const Graph& g) {
  if (auto t = clique_check(g, 3))
    throw PreconditionError("triangle found: " + std::to_string((*t)[0]) + " " + std::to_string((*t)[1]) + " " +
                            std::to_string((*t)[2]));
}

bool take_if_better(std::optional<SelectionOutcome>& best, SelectionOutcome cand) {
  if (!best || better_outcome(cand, *best)) {
    best = std::move(cand);
    return true;
  }
  return false;
}

// Maximum matching of G[keep] as pairs of original ids, ordered by smaller
// endpoint.
std::vector<Edge> maximum_matching(const Graph& g, const VertexSubset& keep) {
  std::vector<Vertex> ids;
  Graph h = g.induced(keep, &ids);
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BG bg(h.n());
  for (auto [u, v] : h.edges()) boost::add_edge(u, v, bg);
  std::vector<boost::graph_traits<BG>::vertex_descriptor> mate(h.n());
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  std::vector<Edge> out;
  const auto none = boost::graph_traits<BG>::null_vertex();
  for (std::size_t u = 0; u < h.n(); ++u)
    if (mate[u] != none && u < mate[u]) out.emplace_back(ids[u], ids[mate[u]]);
  return out;
}

}  // namespace

DensityParams density_params(const Graph& g, const Rational& alpha) {
  DensityParams p;
  p.alpha = alpha;
  p.c = g.density();
  const auto n = static_cast<std::int64_t>(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto d = static_cast<std::int64_t>(g.degree(v));
    p.d.emplace_back(d, n);
    if (d == 0) {
      p.alpha_v.emplace_back(0);
      p.c_v.emplace_back(0);
      continue;
    }
    p.alpha_v.emplace_back(n, 2 * d);
    p.c_v.emplace_back(static_cast<std::int64_t>(edges_within(g, g.neighbors(v))), d * d);
  }
  return p;
}

SelectionOutcome triangle_free_local_density(const Graph& g, const Rational& alpha) {
  require_unit_interval(alpha);
  require_triangle_free(g);
  const std::size_t n = g.n();
  const std::size_t k = floor_fraction(alpha, n);
  const auto e = static_cast<std::int64_t>(g.edge_count());
  if (n == 0) return SelectionOutcome{VertexSubset(0), Rational(0), 0, "neighborhood", Guarantee::Held, {}};
  const Rational alpha_eff(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n));
  if (alpha_eff + g.density() < 1)
    throw PreconditionError("alpha + c < 1 (alpha n rounded down to " + std::to_string(k) + ", c = " +
                            to_string(g.density()) + ")");
  const Rational bound = Rational(2 * static_cast<std::int64_t>(k) - static_cast<std::int64_t>(n)) * e /
                         static_cast<std::int64_t>(n);

  if (k == n) {
    SelectionOutcome all{VertexSubset::full(n), bound, g.edge_count(), "neighborhood", Guarantee::Held, {}};
    return all;
  }

  // Peel minimum-degree vertices (lowest id on ties) until the remainder has
  // minimum degree at least n - K, measured against the original n.
  VertexSubset peeled(n);
  BitRow alive = BitRow(n).flipped();
  const std::size_t threshold = n - k;
  while (!alive.none()) {
    Vertex arg = 0;
    std::size_t low = SIZE_MAX;
    alive.for_each([&](Vertex v) {
      std::size_t d = g.row(v).count_and(alive);
      if (d < low) {
        low = d;
        arg = v;
      }
    });
    if (low >= threshold) break;
    alive.reset(arg);
    peeled.insert(arg);
  }
  if (alive.none() || peeled.size() >= k)
    throw Error("peeling exhausted the graph although alpha + c >= 1");

  std::optional<SelectionOutcome> best;
  alive.for_each([&](Vertex v) {
    VertexSubset nbrs(g.row(v) & alive);
    VertexSubset forced(alive);
    forced -= nbrs;
    forced |= peeled;
    PoolQuota pool{std::move(nbrs), k - forced.size()};
    auto choice = conditional_expectation_select(g, forced, std::span(&pool, 1));
    SelectionOutcome out;
    out.subset = std::move(choice.subset);
    out.achieved = choice.achieved;
    out.expectation_trace = std::move(choice.trace);
    take_if_better(best, std::move(out));
  });
  best->analytic_bound = bound;
  best->route = peeled.empty() ? "neighborhood" : "peel_neighborhood";
  best->guarantee = best->achieved <= bound ? Guarantee::Held : Guarantee::Missed;
  return *best;
}

bool regular_lower_bound_check(const Graph& g, const Rational& alpha, const OracleOptions& opts) {
  require_unit_interval(alpha);
  if (!g.is_regular()) throw PreconditionError("graph is not regular");
  require_triangle_free(g);
  const Rational an = alpha * static_cast<std::int64_t>(g.n());
  if (boost::multiprecision::denominator(an) != 1) throw PreconditionError("alpha n must be integral");
  return local_density_profile(g, static_cast<std::size_t>(boost::multiprecision::numerator(an)), opts).meets;
}

SelectionOutcome krivelevich_select(const Graph& g, const Rational& alpha, const KrivelevichOptions& opts) {
  if (alpha < Rational(3, 5) || alpha > 1)
    throw PreconditionError("alpha must lie in [3/5, 1], got " + to_string(alpha));
  require_triangle_free(g);
  const std::size_t n = g.n();
  const std::size_t k = floor_fraction(alpha, n);
  const Rational bound = Rational(static_cast<std::int64_t>(2 * k) - static_cast<std::int64_t>(n)) *
                         static_cast<std::int64_t>(n) / 4;

  std::optional<SelectionOutcome> best;
  auto offer = [&](SelectionOutcome cand) { take_if_better(best, std::move(cand)); };

  const Rational alpha_eff = n ? Rational(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n)) : Rational(1);
  if (alpha_eff + g.density() >= 1) offer(triangle_free_local_density(g, alpha_eff));

  // Independent A of size n - K plus the vertices of a matching outside A.
  const std::size_t a_size = n - k;
  std::optional<VertexSubset> a;
  if (a_size == 0)
    a = VertexSubset(n);
  else
    a = independent_set_search(g, a_size);
  if (a) {
    auto matching = maximum_matching(g, a->complement());
    VertexSubset forced = *a;
    const std::size_t pairs = (k - a_size) / 2;
    for (std::size_t i = 0; i < matching.size() && i < pairs; ++i) {
      forced.insert(matching[i].first);
      forced.insert(matching[i].second);
    }
    SelectionOutcome out = derandomized_extension(g, forced, k - forced.size());
    out.route = "matching";
    offer(std::move(out));
  }

  VertexSubset side(n);
  if (is_bipartite(g, &side)) {
    if (side.size() * 2 < n) side = side.complement();
    SelectionOutcome out;
    if (side.size() >= k) {
      PoolQuota pool{side, k};
      auto choice = conditional_expectation_select(g, VertexSubset(n), std::span(&pool, 1));
      out.subset = std::move(choice.subset);
      out.achieved = choice.achieved;
    } else {
      out = derandomized_extension(g, side, k - side.size());
    }
    out.route = "bipartite_side";
    offer(std::move(out));
  }

  offer(derandomized_uniform_subset(g, k));

  if (n <= opts.oracle_threshold && n <= opts.oracle.cap) {
    OracleResult res = min_edges_k_subset(g, k, opts.oracle);
    offer(SelectionOutcome{res.witness, Rational(static_cast<std::int64_t>(res.minimum)), res.minimum, "oracle",
                           Guarantee::Held, {}});
  }

  if (Rational(static_cast<std::int64_t>(best->achieved)) > bound)
    throw CounterexampleCandidate("no strategy met (2 alpha - 1) n^2 / 4 = " + to_string(bound) + "; best " +
                                      std::to_string(best->achieved) + " via " + best->route,
                                  to_graph6(g));
  best->analytic_bound = bound;
  best->route = "krivelevich:" + best->route;
  best->guarantee = Guarantee::Held;
  return *best;
}

}  // namespace sparsehalf
