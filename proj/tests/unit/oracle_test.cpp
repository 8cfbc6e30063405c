#include <gtest/gtest.h>

#include <cstdlib>

#include "sparsehalf/errors.hpp"
#include "sparsehalf/generators.hpp"
#include "sparsehalf/graph6.hpp"
#include "sparsehalf/oracle.hpp"
#include "sparsehalf/structure.hpp"
#include "support.hpp"

using namespace sparsehalf;
using testsupport::load_corpus;
using testsupport::naive_min_edges;

namespace {

Graph c5_with_pendant() { return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}}); }

void expect_matches_naive(const Graph& g, std::size_t k) {
  const OracleResult r = min_edges_k_subset(g, k);
  const auto naive = naive_min_edges(g, k);
  ASSERT_EQ(r.minimum, naive.minimum) << to_graph6(g) << " k=" << k;
  ASSERT_EQ(r.witness, testsupport::subset_of_mask(g.n(), naive.witness)) << to_graph6(g) << " k=" << k;
  ASSERT_EQ(r.witness.size(), k);
  ASSERT_EQ(edges_within(g, r.witness), r.minimum);
}

}  // namespace

TEST(Oracle, Examples) {
  EXPECT_EQ(min_edges_k_subset(gen::turan(3, 6), 3).minimum, 2u);
  const OracleResult p = min_edges_k_subset(gen::petersen(), 5);
  EXPECT_EQ(p.minimum, 2u);
  EXPECT_EQ(50 * p.minimum, 100u);  // n^2/50
  for (const Graph& g : {gen::petersen(), gen::complete(6), gen::turan(3, 9)}) {
    EXPECT_EQ(min_edges_k_subset(g, 0).minimum, 0u);
    EXPECT_EQ(min_edges_k_subset(g, 1).minimum, 0u);
  }
}

TEST(Oracle, WholeVertexSet) {
  const Graph g = gen::petersen();
  const OracleResult r = min_edges_k_subset(g, g.n());
  EXPECT_EQ(r.minimum, g.edge_count());
  EXPECT_EQ(r.witness.size(), g.n());
}

TEST(Oracle, Preconditions) {
  EXPECT_THROW(min_edges_k_subset(gen::c5(), 6), PreconditionError);
  EXPECT_THROW(min_edges_k_subset(gen::turan(3, 31), 15), CapExceeded);
  OracleOptions opts;
  opts.cap = 10;
  EXPECT_THROW(min_edges_k_subset(gen::turan(3, 12), 6, opts), CapExceeded);
  opts.allow_above_cap = true;
  EXPECT_EQ(min_edges_k_subset(gen::turan(3, 12), 6, opts).minimum, 8u);
  opts.cap = 100;
  EXPECT_THROW(min_edges_k_subset(gen::turan(2, 65), 2, opts), CapExceeded);
}

TEST(Oracle, CapFromEnvironment) {
  ::setenv("SPARSEHALF_ORACLE_CAP", "12", 1);
  EXPECT_EQ(oracle_options_from_env().cap, 12u);
  ::setenv("SPARSEHALF_ORACLE_CAP", "junk", 1);
  EXPECT_THROW(oracle_options_from_env(), PreconditionError);
  ::unsetenv("SPARSEHALF_ORACLE_CAP");
  EXPECT_EQ(oracle_options_from_env().cap, 30u);
}

TEST(Oracle, AgreesWithUnprunedEnumerationUpToEight) {
  for (const Graph& g : load_corpus("all_graphs_n1_8.g6"))
    for (std::size_t k = 0; k <= g.n(); ++k) expect_matches_naive(g, k);
}

TEST(Oracle, AgreesWithUnprunedEnumerationAtNineAndTen) {
  for (const Graph& g : load_corpus("connected_triangle_free_n2_10.g6"))
    if (g.n() >= 9)
      for (std::size_t k = 2; k + 2 <= g.n(); k += 2) expect_matches_naive(g, k);
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const Graph g = testsupport::random_graph(rng, 9 + i % 2, 0.15 + 0.002 * i);
    for (std::size_t k = 0; k <= g.n(); ++k) expect_matches_naive(g, k);
  }
}

TEST(Oracle, AgreesWithUnprunedEnumerationOnLargerGraphs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 12; ++i) {
    const Graph g = testsupport::random_kr_free(rng, 16 + i % 5, 4, 0.6);
    expect_matches_naive(g, g.n() / 2);
  }
  expect_matches_naive(gen::clebsch(), 8);
  expect_matches_naive(gen::turan(3, 18), 9);
}

TEST(Oracle, MinimumIsNonDecreasingInK) {
  for (const Graph& g : load_corpus("all_graphs_n1_8.g6")) {
    std::uint64_t prev = 0;
    for (std::size_t k = 0; k <= g.n(); ++k) {
      const std::uint64_t m = min_edges_k_subset(g, k).minimum;
      ASSERT_GE(m, prev) << to_graph6(g);
      prev = m;
    }
  }
}

TEST(LocalDensity, Examples) {
  const LocalDensityProfile c5 = local_density_profile(gen::c5(), 3);
  EXPECT_EQ(c5.minimum, 1u);
  EXPECT_EQ(c5.bound, Rational(1));
  EXPECT_TRUE(c5.meets);

  const LocalDensityProfile pend = local_density_profile(c5_with_pendant(), 5);
  EXPECT_EQ(pend.bound, Rational(4));
  EXPECT_EQ(pend.minimum, 3u);
  EXPECT_FALSE(pend.meets);

  const LocalDensityProfile t2 = local_density_profile(gen::turan(2, 10), 6);
  EXPECT_EQ(t2.minimum, 5u);
  EXPECT_EQ(t2.bound, Rational(5));
  EXPECT_TRUE(t2.meets);
}

TEST(Extremal, Examples) {
  const ExtremalReport t312 = check_extremal_characterization(gen::turan(3, 12), CharacterizationKind::RegularK4Free);
  EXPECT_EQ(t312.verdict, Verdict::ConformsExtremal);
  EXPECT_EQ(t312.minimum, 8u);
  EXPECT_EQ(t312.threshold, Rational(8));
  EXPECT_TRUE(t312.structure_matches);
  EXPECT_EQ(std::string(to_string(t312.verdict)), "conforms-extremal");

  const ExtremalReport c52 =
      check_extremal_characterization(gen::blow_up(gen::c5(), 2), CharacterizationKind::RegularK4Free);
  EXPECT_EQ(c52.verdict, Verdict::ConformsStrict);
  EXPECT_EQ(c52.minimum, 2u);

  const ExtremalReport t28 = check_extremal_characterization(
      gen::turan(2, 8), CharacterizationKind::TriangleFreeLocalDensity, Rational(3, 4));
  EXPECT_EQ(t28.verdict, Verdict::ConformsExtremal);
  EXPECT_EQ(t28.minimum, 8u);
  EXPECT_EQ(t28.threshold, Rational(8));
}

TEST(Extremal, HypothesisMismatchIsReported) {
  EXPECT_THROW(check_extremal_characterization(c5_with_pendant(), CharacterizationKind::RegularK4Free),
               PreconditionError);
  EXPECT_THROW(check_extremal_characterization(gen::complete(4), CharacterizationKind::RegularK4Free),
               PreconditionError);
  EXPECT_THROW(check_extremal_characterization(gen::turan(3, 6), CharacterizationKind::TriangleFreeLocalDensity,
                                               Rational(2, 3)),
               PreconditionError);
  EXPECT_THROW(check_extremal_characterization(gen::c5(), CharacterizationKind::BipartiteLocalDensity, Rational(3, 5)),
               PreconditionError);
  EXPECT_THROW(check_extremal_characterization(gen::turan(2, 8), CharacterizationKind::TriangleFreeLocalDensity),
               PreconditionError);
}

TEST(Extremal, ReproducerIsGraph6) {
  const Graph g = gen::turan(3, 6);
  const ExtremalReport r = check_extremal_characterization(g, CharacterizationKind::RegularK4Free);
  EXPECT_EQ(parse_graph6(r.reproducer), g);
}

// Only balanced complete 3-partite graphs reach n^2/18 among the regular
// K4-free graphs on up to 8 vertices.
TEST(Extremal, SmallRegularK4FreeGraphsConform) {
  for (const Graph& g : load_corpus("all_graphs_n1_8.g6")) {
    if (!g.is_regular() || !is_k4_free(g)) continue;
    const ExtremalReport r = check_extremal_characterization(g, CharacterizationKind::RegularK4Free);
    ASSERT_NE(r.verdict, Verdict::Violates) << to_graph6(g);
    EXPECT_EQ(r.verdict == Verdict::ConformsExtremal, is_balanced_complete_multipartite(g, 3) && g.n() % 6 == 0)
        << to_graph6(g);
  }
}
