#include "sparsehalf/pipeline.hpp"

#include <functional>
#include <string>

#include "sparsehalf/dense_route.hpp"
#include "sparsehalf/derandomize.hpp"
#include "sparsehalf/errors.hpp"
#include "sparsehalf/maxcut.hpp"
#include "sparsehalf/schemes.hpp"
#include "sparsehalf/structure.hpp"

namespace sparsehalf {

RouteChoice parse_route(const std::string& name) {
  if (name == "auto") return RouteChoice::Auto;
  if (name == "sparse") return RouteChoice::Sparse;
  if (name == "medium") return RouteChoice::Medium;
  if (name == "dense") return RouteChoice::Dense;
  if (name == "oracle") return RouteChoice::Oracle;
  throw PreconditionError("unknown route '" + name + "'");
}

const char* to_string(RouteChoice r) {
  switch (r) {
    case RouteChoice::Auto: return "auto";
    case RouteChoice::Sparse: return "sparse";
    case RouteChoice::Medium: return "medium";
    case RouteChoice::Dense: return "dense";
    case RouteChoice::Oracle: return "oracle";
  }
  return "?";
}

SparseHalfResult find_sparse_half(const Graph& g, const SparseHalfOptions& opts) {
  const std::size_t n = g.n();
  const auto k4 = clique_check(g, 4);
  if (k4 && !opts.allow_k4)
    throw PreconditionError("graph contains a K4: " + std::to_string((*k4)[0]) + " " + std::to_string((*k4)[1]) +
                            " " + std::to_string((*k4)[2]) + " " + std::to_string((*k4)[3]));

  SparseHalfResult res;
  res.c = g.density();
  res.regular = g.is_regular();
  res.target = opts.target_size.value_or(n / 2);
  if (res.target > n)
    throw PreconditionError("half size " + std::to_string(res.target) + " exceeds n=" + std::to_string(n));
  const bool default_size = res.target == n / 2;
  const RouteChoice choice = opts.route;
  if (!default_size && choice != RouteChoice::Auto && choice != RouteChoice::Oracle)
    throw PreconditionError(std::string("route ") + to_string(choice) + " only builds halves of size floor(n/2)");

  auto run = [&](const std::string& name, const std::function<SelectionOutcome()>& fn) {
    try {
      res.attempts.push_back({name, fn(), {}});
    } catch (const CapExceeded&) {
      throw;
    } catch (const PreconditionError& e) {
      res.attempts.push_back({name, std::nullopt, e.what()});
    }
  };
  auto wanted = [&](RouteChoice r) { return choice == RouteChoice::Auto || choice == r; };

  if (default_size && wanted(RouteChoice::Sparse))
    run("sparse", [&] {
      MaxCutResult cut = max_cut_search(g);
      SelectionOutcome out = sparse_half_from_cut(g, cut.a);
      out.route = "sparse:" + out.route;
      return out;
    });
  if (default_size && wanted(RouteChoice::Medium)) {
    if (k4)
      res.attempts.push_back({"medium", std::nullopt, "graph contains a K4"});
    else
      run("medium", [&] { return medium_route(g); });
  }
  if (default_size && wanted(RouteChoice::Dense)) {
    if (k4)
      res.attempts.push_back({"dense", std::nullopt, "graph contains a K4"});
    else
      run("dense", [&] { return dense_route(g); });
  }
  if (choice == RouteChoice::Auto) run("uniform", [&] { return derandomized_uniform_subset(g, res.target); });

  const bool oracle_fits = n <= opts.oracle_threshold && (n <= opts.oracle.cap || opts.oracle.allow_above_cap);
  if (choice == RouteChoice::Oracle || (choice == RouteChoice::Auto && oracle_fits)) {
    res.oracle = min_edges_k_subset(g, res.target, opts.oracle);
    const Rational m(static_cast<std::int64_t>(res.oracle->minimum));
    res.attempts.push_back(
        {"oracle", SelectionOutcome{res.oracle->witness, m, res.oracle->minimum, "oracle", Guarantee::Held, {}}, {}});
  }

  // Fewest edges; among equals a route whose guarantee held, then the
  // earliest route in dispatch order.
  const SelectionOutcome* best = nullptr;
  for (const auto& a : res.attempts) {
    if (!a.outcome) continue;
    const SelectionOutcome& o = *a.outcome;
    if (!best || o.achieved < best->achieved ||
        (o.achieved == best->achieved && o.guarantee == Guarantee::Held && best->guarantee != Guarantee::Held))
      best = &o;
  }
  if (!best) {
    std::string why = "no route applies";
    for (const auto& a : res.attempts)
      if (!a.skipped.empty()) why += "; " + a.route + ": " + a.skipped;
    throw PreconditionError(why);
  }
  res.best = *best;
  if (k4) {
    res.best.guarantee = Guarantee::HypothesisUnmet;
    for (auto& a : res.attempts)
      if (a.outcome) a.outcome->guarantee = Guarantee::HypothesisUnmet;
  }
  res.verdict = compare_with_n2_over_18(res.best.achieved, n);
  return res;
}

BipartiteSplit make_bipartite(const Graph& g, const SparseHalfOptions& opts) {
  const std::size_t n = g.n();
  if (n % 2) throw PreconditionError("make_bipartite needs even n, got " + std::to_string(n));
  SparseHalfOptions o = opts;
  o.target_size.reset();
  o.allow_k4 = false;
  SparseHalfResult r = find_sparse_half(g, o);
  BipartiteSplit out;
  out.a = r.best.subset;
  out.b = out.a.complement();
  out.removed = edges_within(g, out.a) + edges_within(g, out.b);
  out.bound = Rational(static_cast<std::int64_t>(n * n), 9);
  out.within_bound = 9 * out.removed <= n * n;
  return out;
}

}  // namespace sparsehalf
