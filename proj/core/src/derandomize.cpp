#include "sparsehalf/derandomize.hpp"

#include <string>

#include "sparsehalf/errors.hpp"

namespace sparsehalf {

const char* to_string(Guarantee g) {
  switch (g) {
    case Guarantee::Held: return "held";
    case Guarantee::HypothesisUnmet: return "hypothesis_unmet";
    case Guarantee::Missed: return "missed";
  }
  return "?";
}

const char* to_string(HalfVerdict v) {
  switch (v) {
    case HalfVerdict::Strict: return "strict";
    case HalfVerdict::Equality: return "equality";
    case HalfVerdict::Exceeds: return "exceeds";
  }
  return "?";
}

HalfVerdict compare_with_n2_over_18(std::uint64_t edges, std::size_t n) {
  const std::uint64_t lhs = 18 * edges;
  const std::uint64_t rhs = static_cast<std::uint64_t>(n) * n;
  if (lhs < rhs) return HalfVerdict::Strict;
  if (lhs == rhs) return HalfVerdict::Equality;
  return HalfVerdict::Exceeds;
}

bool better_outcome(const SelectionOutcome& a, const SelectionOutcome& b) {
  if (a.achieved != b.achieved) return a.achieved < b.achieved;
  return lex_compare(a.subset, b.subset) < 0;
}

Rational pair_probability(std::size_t take, std::size_t pool) {
  if (pool < 2 || take < 2) return Rational(0);
  return Rational(static_cast<std::int64_t>(take * (take - 1))) /
         Rational(static_cast<std::int64_t>(pool * (pool - 1)));
}

namespace {

struct PoolState {
  std::size_t remaining = 0;  // undecided vertices
  std::size_t take = 0;       // still to choose
};

struct Aggregates {
  std::int64_t in_s = 0;                           // e(S)
  std::vector<std::int64_t> s_pool;                // e(S, R_j)
  std::vector<std::int64_t> pool_in;               // e(R_j)
  std::vector<std::vector<std::int64_t>> pool_pool;  // e(R_j, R_l), j != l
};

Rational single(const PoolState& p) {
  if (p.remaining == 0) return Rational(0);
  return Rational(static_cast<std::int64_t>(p.take)) / Rational(static_cast<std::int64_t>(p.remaining));
}

Rational expectation(const Aggregates& agg, const std::vector<PoolState>& pools) {
  const std::size_t t = pools.size();
  std::vector<Rational> p(t);
  for (std::size_t j = 0; j < t; ++j) p[j] = single(pools[j]);
  Rational e(agg.in_s);
  for (std::size_t j = 0; j < t; ++j) {
    if (agg.s_pool[j]) e += agg.s_pool[j] * p[j];
    if (agg.pool_in[j]) e += agg.pool_in[j] * pair_probability(pools[j].take, pools[j].remaining);
    for (std::size_t l = j + 1; l < t; ++l)
      if (agg.pool_pool[j][l]) e += agg.pool_pool[j][l] * p[j] * p[l];
  }
  return e;
}

}  // namespace

DerandomizedChoice conditional_expectation_select(const Graph& g, const VertexSubset& forced,
                                                  std::span<const PoolQuota> quotas) {
  const std::size_t n = g.n();
  const std::size_t t = quotas.size();
  if (forced.universe() != n) throw PreconditionError("forced set universe does not match graph");
  std::vector<int> pool_of(n, -1);
  std::vector<PoolState> pools(t);
  for (std::size_t j = 0; j < t; ++j) {
    const auto& q = quotas[j];
    if (q.pool.universe() != n) throw PreconditionError("pool universe does not match graph");
    if (q.take > q.pool.size())
      throw PreconditionError("pool quota " + std::to_string(q.take) + " exceeds pool size " +
                              std::to_string(q.pool.size()));
    if (!q.pool.disjoint(forced)) throw PreconditionError("pool overlaps the forced set");
    q.pool.bits().for_each([&](Vertex v) {
      if (pool_of[v] >= 0) throw PreconditionError("pools overlap");
      pool_of[v] = static_cast<int>(j);
    });
    pools[j] = {q.pool.size(), q.take};
  }

  // Per-vertex neighbour counts into S and into each undecided pool.
  std::vector<std::int64_t> to_s(n, 0);
  std::vector<std::vector<std::int64_t>> to_pool(n, std::vector<std::int64_t>(t, 0));
  for (Vertex v = 0; v < n; ++v) {
    if (pool_of[v] < 0) continue;
    to_s[v] = static_cast<std::int64_t>(g.row(v).count_and(forced.bits()));
    for (std::size_t l = 0; l < t; ++l)
      to_pool[v][l] = static_cast<std::int64_t>(g.row(v).count_and(quotas[l].pool.bits()));
  }

  Aggregates agg;
  agg.in_s = static_cast<std::int64_t>(edges_within(g, forced));
  agg.s_pool.assign(t, 0);
  agg.pool_in.assign(t, 0);
  agg.pool_pool.assign(t, std::vector<std::int64_t>(t, 0));
  for (std::size_t j = 0; j < t; ++j) {
    agg.s_pool[j] = static_cast<std::int64_t>(edges_between(g, forced, quotas[j].pool));
    agg.pool_in[j] = static_cast<std::int64_t>(edges_within(g, quotas[j].pool));
    for (std::size_t l = j + 1; l < t; ++l)
      agg.pool_pool[j][l] = agg.pool_pool[l][j] =
          static_cast<std::int64_t>(edges_between(g, quotas[j].pool, quotas[l].pool));
  }

  DerandomizedChoice out;
  out.subset = forced;
  out.expectation = expectation(agg, pools);
  out.trace.push_back(out.expectation);

  for (Vertex v = 0; v < n; ++v) {
    const int pj = pool_of[v];
    if (pj < 0) continue;
    const std::size_t j = static_cast<std::size_t>(pj);

    Aggregates removed = agg;
    removed.s_pool[j] -= to_s[v];
    removed.pool_in[j] -= to_pool[v][j];
    for (std::size_t l = 0; l < t; ++l)
      if (l != j) {
        removed.pool_pool[j][l] -= to_pool[v][l];
        removed.pool_pool[l][j] -= to_pool[v][l];
      }

    Aggregates included = removed;
    included.in_s += to_s[v];
    for (std::size_t l = 0; l < t; ++l) included.s_pool[l] += to_pool[v][l];

    std::vector<PoolState> pools_in = pools;
    std::vector<PoolState> pools_out = pools;
    --pools_in[j].remaining;
    --pools_in[j].take;
    --pools_out[j].remaining;

    bool include;
    if (pools[j].take == 0) {
      include = false;
    } else if (pools[j].take == pools[j].remaining) {
      include = true;
    } else {
      include = expectation(included, pools_in) <= expectation(removed, pools_out);
    }
    if (include) {
      agg = std::move(included);
      pools = std::move(pools_in);
      out.subset.insert(v);
    } else {
      agg = std::move(removed);
      pools = std::move(pools_out);
    }
    out.trace.push_back(expectation(agg, pools));

    g.row(v).for_each([&](Vertex u) {
      if (pool_of[u] < 0 || u <= v) return;
      --to_pool[u][j];
      if (include) ++to_s[u];
    });
  }
  out.achieved = edges_within(g, out.subset);
  return out;
}

SelectionOutcome derandomized_uniform_subset(const Graph& g, std::size_t k) {
  if (k > g.n())
    throw PreconditionError("subset size " + std::to_string(k) + " exceeds n=" + std::to_string(g.n()));
  PoolQuota all{VertexSubset::full(g.n()), k};
  auto choice = conditional_expectation_select(g, VertexSubset(g.n()), std::span(&all, 1));
  SelectionOutcome out;
  out.subset = std::move(choice.subset);
  out.analytic_bound = std::move(choice.expectation);
  out.achieved = choice.achieved;
  out.route = "uniform";
  out.guarantee = out.achieved <= out.analytic_bound ? Guarantee::Held : Guarantee::Missed;
  out.expectation_trace = std::move(choice.trace);
  return out;
}

SelectionOutcome derandomized_extension(const Graph& g, const VertexSubset& a, std::size_t k_extra) {
  if (a.universe() != g.n()) throw PreconditionError("subset universe does not match graph");
  VertexSubset rest = a.complement();
  if (k_extra > rest.size())
    throw PreconditionError("extension by " + std::to_string(k_extra) + " exceeds |V \\ A| = " +
                            std::to_string(rest.size()));
  PoolQuota pool{std::move(rest), k_extra};
  auto choice = conditional_expectation_select(g, a, std::span(&pool, 1));
  SelectionOutcome out;
  out.subset = std::move(choice.subset);
  out.analytic_bound = std::move(choice.expectation);
  out.achieved = choice.achieved;
  out.route = "extension";
  out.guarantee = out.achieved <= out.analytic_bound ? Guarantee::Held : Guarantee::Missed;
  out.expectation_trace = std::move(choice.trace);
  return out;
}

}  // namespace sparsehalf
