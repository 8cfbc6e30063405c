#include <gtest/gtest.h>

#include "json.hpp"
#include "sparsehalf/errors.hpp"
#include "sparsehalf/generators.hpp"
#include "sparsehalf/oracle.hpp"
#include "sparsehalf/pipeline.hpp"
#include "sparsehalf/serialize.hpp"
#include "sparsehalf/structure.hpp"
#include "support.hpp"

using namespace sparsehalf;

TEST(Pipeline, TuranTwelveIsEquality) {
  const SparseHalfResult r = find_sparse_half(gen::turan(3, 12));
  EXPECT_EQ(r.best.achieved, 8u);
  EXPECT_EQ(r.verdict, HalfVerdict::Equality);
  EXPECT_EQ(r.target, 6u);
  EXPECT_TRUE(r.regular);
  ASSERT_TRUE(r.oracle);
  EXPECT_EQ(r.oracle->minimum, 8u);
  EXPECT_EQ(r.best.route.rfind("dense", 0), 0u);
  EXPECT_EQ(r.best.guarantee, Guarantee::Held);
}

TEST(Pipeline, PetersenIsStrict) {
  const SparseHalfResult r = find_sparse_half(gen::petersen());
  EXPECT_EQ(r.best.subset.size(), 5u);
  EXPECT_EQ(r.best.achieved, 2u);
  EXPECT_EQ(r.verdict, HalfVerdict::Strict);
}

TEST(Pipeline, BipartiteGraphsAreFarBelow) {
  for (const Graph& g : {gen::turan(2, 12), gen::hypercube(4), gen::cycle(10)}) {
    const SparseHalfResult r = find_sparse_half(g);
    EXPECT_EQ(r.best.achieved, 0u);
    EXPECT_EQ(r.verdict, HalfVerdict::Strict);
  }
}

TEST(Pipeline, K4IsRejectedWithWitness) {
  try {
    find_sparse_half(gen::complete(5));
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("K4: 0 1 2 3"), std::string::npos) << e.what();
  }
}

TEST(Pipeline, AllowK4SuppressesGuarantees) {
  SparseHalfOptions opts;
  opts.allow_k4 = true;
  const SparseHalfResult r = find_sparse_half(gen::complete(6), opts);
  EXPECT_EQ(r.best.achieved, 3u);
  EXPECT_EQ(r.best.guarantee, Guarantee::HypothesisUnmet);
  for (const auto& a : r.attempts)
    if (a.outcome) EXPECT_EQ(a.outcome->guarantee, Guarantee::HypothesisUnmet);
}

TEST(Pipeline, ForcedRoutes) {
  const Graph g = gen::turan(3, 12);
  for (RouteChoice c : {RouteChoice::Medium, RouteChoice::Dense, RouteChoice::Oracle, RouteChoice::Sparse}) {
    SparseHalfOptions opts;
    opts.route = c;
    const SparseHalfResult r = find_sparse_half(g, opts);
    EXPECT_EQ(r.best.subset.size(), 6u);
    EXPECT_GE(r.best.achieved, 8u);
  }
  SparseHalfOptions medium;
  medium.route = RouteChoice::Medium;
  EXPECT_THROW(find_sparse_half(gen::blow_up(gen::c5(), 2), medium), PreconditionError);
}

TEST(Pipeline, OtherSizes) {
  SparseHalfOptions opts;
  opts.target_size = 3;
  const SparseHalfResult r = find_sparse_half(gen::turan(3, 6), opts);
  EXPECT_EQ(r.best.achieved, 2u);
  EXPECT_EQ(r.target, 3u);
  opts.target_size = 2;
  EXPECT_EQ(find_sparse_half(gen::turan(3, 6), opts).best.achieved, 0u);
  opts.route = RouteChoice::Dense;
  EXPECT_THROW(find_sparse_half(gen::turan(3, 6), opts), PreconditionError);
}

TEST(Pipeline, OracleCapIsRespected) {
  SparseHalfOptions opts;
  opts.route = RouteChoice::Oracle;
  opts.oracle.cap = 10;
  EXPECT_THROW(find_sparse_half(gen::turan(3, 12), opts), CapExceeded);
  SparseHalfOptions automatic;
  automatic.oracle.cap = 10;
  const SparseHalfResult r = find_sparse_half(gen::turan(3, 12), automatic);
  EXPECT_FALSE(r.oracle);
  EXPECT_EQ(r.best.achieved, 8u);
}

TEST(Pipeline, ParseRoute) {
  EXPECT_EQ(parse_route("dense"), RouteChoice::Dense);
  EXPECT_EQ(std::string(to_string(RouteChoice::Medium)), "medium");
  EXPECT_THROW(parse_route("fast"), PreconditionError);
}

TEST(Pipeline, NoSelectorGoesBelowTheOracle) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    const Graph g = testsupport::random_kr_free(rng, 6 + i % 14, 4, 0.7);
    const SparseHalfResult r = find_sparse_half(g);
    ASSERT_TRUE(r.oracle);
    for (const auto& a : r.attempts) {
      if (!a.outcome) continue;
      EXPECT_GE(a.outcome->achieved, r.oracle->minimum);
      EXPECT_EQ(a.outcome->achieved, edges_within(g, a.outcome->subset));
      EXPECT_EQ(a.outcome->subset.size(), g.n() / 2);
      if (a.outcome->guarantee == Guarantee::Held) EXPECT_LE(Rational(a.outcome->achieved), a.outcome->analytic_bound);
    }
    EXPECT_EQ(r.best.achieved, r.oracle->minimum);
  }
}

TEST(Bipartite, Examples) {
  const BipartiteSplit t = make_bipartite(gen::turan(3, 12));
  EXPECT_EQ(t.removed, 16u);
  EXPECT_EQ(t.a.size(), 6u);
  EXPECT_EQ(t.b.size(), 6u);
  EXPECT_EQ(t.bound, Rational(16));
  EXPECT_TRUE(t.within_bound);

  EXPECT_EQ(make_bipartite(gen::turan(2, 10)).removed, 0u);

  const BipartiteSplit c = make_bipartite(gen::blow_up(gen::c5(), 2));
  EXPECT_EQ(c.removed, 4u);
  EXPECT_TRUE(c.within_bound);

  EXPECT_THROW(make_bipartite(gen::c5()), PreconditionError);
}

TEST(Serialize, SelectionOutcomeShape) {
  const SparseHalfResult r = find_sparse_half(gen::petersen());
  const auto j = nlohmann::json::parse(to_json(r.best));
  EXPECT_EQ(j.at("size"), 5);
  EXPECT_EQ(j.at("achieved"), 2);
  EXPECT_EQ(j.at("subset").size(), 5u);
  EXPECT_TRUE(j.at("analytic_bound").contains("num"));
  EXPECT_TRUE(j.at("analytic_bound").contains("den"));
  EXPECT_TRUE(j.contains("route"));
  EXPECT_TRUE(j.contains("guarantee_flag"));

  const auto full = nlohmann::json::parse(to_json(r));
  EXPECT_EQ(full.at("verdict"), "strict");
  EXPECT_EQ(full.at("oracle").at("minimum"), 2);
  EXPECT_EQ(full.at("c").at("num"), "3");
  EXPECT_EQ(full.at("c").at("den"), "20");
}

TEST(Serialize, OracleAndExtremal) {
  const auto o = nlohmann::json::parse(to_json(min_edges_k_subset(gen::turan(3, 6), 3), 3));
  EXPECT_EQ(o.at("minimum"), 2);
  EXPECT_EQ(o.at("witness"), nlohmann::json::array({0, 1, 2}));
  const auto x = nlohmann::json::parse(
      to_json(check_extremal_characterization(gen::turan(3, 6), CharacterizationKind::RegularK4Free)));
  EXPECT_EQ(x.at("verdict"), "conforms-extremal");
  EXPECT_EQ(x.at("reproducer"), "E]~o");
}
