#include "sparsehalf/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "sparsehalf/derandomize.hpp"
#include "sparsehalf/errors.hpp"
#include "sparsehalf/graph6.hpp"
#include "sparsehalf/structure.hpp"

namespace sparsehalf {
namespace {

using Mask = std::uint64_t;
constexpr std::size_t kHardLimit = 64;

// Depth-first subset search over a fixed vertex order. A partial set S is
// cut off when e(S) plus the r smallest values of |N(v) & S| over the
// remaining candidates already reaches the incumbent.
class SubsetSearch {
 public:
  SubsetSearch(const Graph& g, std::vector<Vertex> order, std::size_t k)
      : n_(g.n()), k_(k), order_(std::move(order)), adj_(g.n(), 0) {
    for (Vertex v = 0; v < n_; ++v)
      g.row(v).for_each([&](Vertex w) { adj_[v] |= Mask{1} << w; });
  }

  /// Minimum over all k-subsets; `incumbent` is an achieved value used for
  /// the initial cut-off (its set is returned when nothing beats it).
  void minimise(std::uint64_t incumbent, Mask incumbent_set) {
    best_ = incumbent;
    best_set_ = incumbent_set;
    strict_ = true;
    dfs(0, 0, 0, 0);
  }

  /// First k-subset in search order with e(S) <= target.
  bool first_at_most(std::uint64_t target) {
    best_ = target;
    strict_ = false;
    found_ = false;
    dfs(0, 0, 0, 0);
    return found_;
  }

  std::uint64_t best() const { return best_; }
  Mask best_set() const { return best_set_; }
  std::uint64_t examined() const { return examined_; }
  std::uint64_t pruned() const { return pruned_; }

 private:
  // strict_: look for e < best_. otherwise stop at the first e <= best_.
  bool cut(std::uint64_t lower) const { return strict_ ? lower >= best_ : lower > best_; }

  void dfs(std::size_t pos, Mask chosen, std::size_t size, std::uint64_t edges) {
    if (found_) return;
    if (size == k_) {
      ++examined_;
      if (strict_ ? edges < best_ : edges <= best_) {
        best_ = edges;
        best_set_ = chosen;
        if (!strict_) found_ = true;
      }
      return;
    }
    const std::size_t need = k_ - size;
    if (n_ - pos < need) return;
    if (size > 0) {
      // r smallest |N(v) & S| over remaining candidates, via counting.
      std::vector<std::uint32_t> hist(size + 1, 0);
      for (std::size_t i = pos; i < n_; ++i)
        ++hist[static_cast<std::size_t>(std::popcount(adj_[order_[i]] & chosen))];
      std::uint64_t lower = edges;
      std::size_t left = need;
      for (std::size_t c = 0; c <= size && left; ++c) {
        std::size_t take = std::min<std::size_t>(left, hist[c]);
        lower += static_cast<std::uint64_t>(take) * c;
        left -= take;
      }
      if (cut(lower)) {
        ++pruned_;
        return;
      }
    }
    const Vertex v = order_[pos];
    const Mask bit = Mask{1} << v;
    dfs(pos + 1, chosen | bit, size + 1, edges + static_cast<std::uint64_t>(std::popcount(adj_[v] & chosen)));
    dfs(pos + 1, chosen, size, edges);
  }

  std::size_t n_;
  std::size_t k_;
  std::vector<Vertex> order_;
  std::vector<Mask> adj_;
  std::uint64_t best_ = 0;
  Mask best_set_ = 0;
  bool strict_ = true;
  bool found_ = false;
  std::uint64_t examined_ = 0;
  std::uint64_t pruned_ = 0;
};

VertexSubset subset_from_mask(std::size_t n, Mask m) {
  VertexSubset s(n);
  while (m) {
    s.insert(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return s;
}

Mask mask_from_subset(const VertexSubset& s) {
  Mask m = 0;
  s.bits().for_each([&](Vertex v) { m |= Mask{1} << v; });
  return m;
}

}  // namespace

OracleOptions oracle_options_from_env() {
  OracleOptions opts;
  if (const char* env = std::getenv("SPARSEHALF_ORACLE_CAP")) {
    char* end = nullptr;
    unsigned long cap = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || cap == 0)
      throw PreconditionError(std::string("SPARSEHALF_ORACLE_CAP must be a positive integer, got '") + env + "'");
    opts.cap = static_cast<std::size_t>(cap);
  }
  return opts;
}

OracleResult min_edges_k_subset(const Graph& g, std::size_t k, const OracleOptions& opts) {
  const std::size_t n = g.n();
  if (k > n) throw PreconditionError("oracle subset size " + std::to_string(k) + " exceeds n=" + std::to_string(n));
  if (n > kHardLimit || (n > opts.cap && !opts.allow_above_cap))
    throw CapExceeded("oracle cap exceeded: n=" + std::to_string(n) + " > cap " + std::to_string(opts.cap) +
                      (n > kHardLimit ? " (hard limit 64)" : " (pass the override to run anyway)"));

  OracleResult res;
  if (k == 0) {
    res.witness = VertexSubset(n);
    res.subsets_examined = 1;
    return res;
  }

  // Phase 1: minimum value, high-degree vertices first.
  std::vector<Vertex> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), Vertex{0});
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  SelectionOutcome seed = derandomized_uniform_subset(g, k);
  SubsetSearch phase1(g, by_degree, k);
  phase1.minimise(seed.achieved, mask_from_subset(seed.subset));
  res.minimum = phase1.best();

  // Phase 2: lexicographically smallest minimiser, ids ascending with
  // inclusion explored first.
  std::vector<Vertex> by_id(n);
  std::iota(by_id.begin(), by_id.end(), Vertex{0});
  SubsetSearch phase2(g, by_id, k);
  if (!phase2.first_at_most(res.minimum))
    throw Error("oracle internal error: no minimiser found in lexicographic pass");
  res.witness = subset_from_mask(n, phase2.best_set());
  res.subsets_examined = phase1.examined() + phase2.examined();
  res.pruned = phase1.pruned() + phase2.pruned();
  return res;
}

LocalDensityProfile local_density_profile(const Graph& g, std::size_t k, const OracleOptions& opts) {
  if (g.n() == 0) throw PreconditionError("local density profile of the empty graph");
  LocalDensityProfile p;
  p.minimum = min_edges_k_subset(g, k, opts).minimum;
  const Rational alpha(static_cast<std::int64_t>(k), static_cast<std::int64_t>(g.n()));
  p.bound = (2 * alpha - 1) * Rational(static_cast<std::int64_t>(g.edge_count()));
  p.meets = Rational(static_cast<std::int64_t>(p.minimum)) >= p.bound;
  return p;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::ConformsStrict: return "conforms-strict";
    case Verdict::ConformsExtremal: return "conforms-extremal";
    case Verdict::Violates: return "VIOLATES";
  }
  return "?";
}

ExtremalReport check_extremal_characterization(const Graph& g, CharacterizationKind kind,
                                               const std::optional<Rational>& alpha,
                                               const OracleOptions& opts) {
  const std::size_t n = g.n();
  if (n == 0) throw PreconditionError("characterization check on the empty graph");
  ExtremalReport rep;
  rep.reproducer = to_graph6(g);
  const Rational n2(static_cast<std::int64_t>(n * n));

  std::size_t parts = 0;
  switch (kind) {
    case CharacterizationKind::RegularK4Free: {
      if (!g.is_regular()) throw PreconditionError("hypothesis mismatch: graph is not regular");
      if (auto k4 = clique_check(g, 4)) throw PreconditionError("hypothesis mismatch: graph contains a K4");
      rep.k = n / 2;
      rep.threshold = n2 / 18;
      parts = 3;
      break;
    }
    case CharacterizationKind::TriangleFreeLocalDensity:
    case CharacterizationKind::BipartiteLocalDensity: {
      if (!alpha) throw PreconditionError("hypothesis mismatch: alpha is required");
      const Rational a = *alpha;
      const Rational an = a * static_cast<std::int64_t>(n);
      if (boost::multiprecision::denominator(an) != 1)
        throw PreconditionError("hypothesis mismatch: alpha n must be integral");
      if (a > 1) throw PreconditionError("hypothesis mismatch: alpha must be at most 1");
      if (kind == CharacterizationKind::TriangleFreeLocalDensity) {
        if (a <= Rational(3, 5)) throw PreconditionError("hypothesis mismatch: alpha must exceed 3/5");
        if (!is_triangle_free(g)) throw PreconditionError("hypothesis mismatch: graph contains a triangle");
      } else {
        if (a < Rational(1, 2)) throw PreconditionError("hypothesis mismatch: alpha must be at least 1/2");
        if (!is_bipartite(g)) throw PreconditionError("hypothesis mismatch: graph is not bipartite");
      }
      rep.k = static_cast<std::size_t>(boost::multiprecision::numerator(an));
      rep.threshold = (2 * a - 1) * n2 / 4;
      parts = 2;
      break;
    }
  }

  OracleResult res = min_edges_k_subset(g, rep.k, opts);
  rep.minimum = res.minimum;
  rep.witness = res.witness;
  const bool meets = Rational(static_cast<std::int64_t>(res.minimum)) >= rep.threshold;
  rep.structure_matches = is_balanced_complete_multipartite(g, parts) &&
                          (kind != CharacterizationKind::RegularK4Free || n % 6 == 0);
  if (!meets)
    rep.verdict = Verdict::ConformsStrict;
  else
    rep.verdict = rep.structure_matches ? Verdict::ConformsExtremal : Verdict::Violates;
  return rep;
}

}  // namespace sparsehalf
