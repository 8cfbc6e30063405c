#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "sparsehalf/errors.hpp"
#include "sparsehalf/generators.hpp"
#include "sparsehalf/graph.hpp"
#include "sparsehalf/graph6.hpp"
#include "sparsehalf/structure.hpp"
#include "support.hpp"

using namespace sparsehalf;
using testsupport::load_corpus;

namespace {

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.push_back({0, v});
  return Graph::from_edges(leaves + 1, e);
}

std::vector<Graph> sample_graphs() {
  std::vector<Graph> gs = {gen::c5(), gen::petersen(), gen::turan(3, 9), gen::complete(5), gen::clebsch(),
                           gen::hypercube(3), star(4), Graph::from_edges(4, {})};
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) gs.push_back(testsupport::random_graph(rng, 3 + i % 17, 0.1 + 0.02 * i));
  return gs;
}

}  // namespace

TEST(BuildGraph, Triangle) {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g.edge_count(), 3u);
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2u);
}

TEST(BuildGraph, Edgeless) {
  const Graph g = Graph::from_edges(4, {});
  EXPECT_EQ(g.n(), 4u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(BuildGraph, K222HasTwelveEdges) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v)
      if (u / 2 != v / 2) e.push_back({u, v});
  const Graph g = Graph::from_edges(6, e);
  EXPECT_EQ(g.edge_count(), 12u);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(g.degree(v), 4u);
  EXPECT_EQ(g, gen::turan(3, 6));
}

TEST(BuildGraph, DuplicatesCollapse) {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(BuildGraph, RejectsBadPairs) {
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), PreconditionError);
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), PreconditionError);
}

TEST(BuildGraph, CachedFieldsAreConsistent) {
  for (const Graph& g : sample_graphs()) {
    std::uint64_t sum = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
      EXPECT_FALSE(g.adjacent(v, v));
      EXPECT_EQ(g.degree(v), g.row(v).count());
      sum += g.degree(v);
      for (Vertex u = 0; u < g.n(); ++u) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
    }
    EXPECT_EQ(sum, 2 * g.edge_count());
    EXPECT_EQ(g.density() * static_cast<std::int64_t>(g.n() * g.n()), Rational(g.edge_count()));
  }
}

TEST(VertexSubset, SizeMatchesMembers) {
  VertexSubset s(10, {1, 3, 3, 7});
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.members(), (std::vector<Vertex>{1, 3, 7}));
  s.erase(3);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.complement().size(), 8u);
}

TEST(EdgeCount, CliquePair) {
  EXPECT_EQ(edges_within(gen::complete(4), VertexSubset(4, {0, 1})), 1u);
}

TEST(EdgeCount, K222PartPlusVertex) {
  EXPECT_EQ(edges_within(gen::turan(3, 6), VertexSubset(6, {0, 1, 2})), 2u);
}

TEST(EdgeCount, C5Path) {
  const Graph g = gen::c5();
  const VertexSubset s(5, {0, 1, 2});
  EXPECT_EQ(edges_within(g, s), 2u);
  EXPECT_EQ(edges_between(g, s, VertexSubset(5, {3, 4})), 2u);
}

TEST(EdgeCount, OverlapRejected) {
  EXPECT_THROW(edges_between(gen::c5(), VertexSubset(5, {0, 1}), VertexSubset(5, {1, 2})), PreconditionError);
}

TEST(EdgeCount, HandshakeIdentity) {
  std::mt19937_64 rng(5);
  for (const Graph& g : sample_graphs()) {
    for (int t = 0; t < 5; ++t) {
      std::uniform_int_distribution<std::size_t> pick(0, g.n());
      const VertexSubset s = testsupport::random_subset(rng, g.n(), pick(rng));
      std::uint64_t deg = 0;
      for (Vertex v : s.members()) deg += g.degree(v);
      EXPECT_EQ(2 * edges_within(g, s) + edges_between(g, s, s.complement()), deg);
    }
  }
}

TEST(CliqueCheck, Examples) {
  EXPECT_FALSE(clique_check(gen::petersen(), 3));
  const Graph t = gen::turan(3, 9);
  EXPECT_FALSE(clique_check(t, 4));
  const auto tri = clique_check(t, 3);
  ASSERT_TRUE(tri);
  const auto parts = gen::turan_parts(3, 9);
  EXPECT_NE(parts[(*tri)[0]], parts[(*tri)[1]]);
  EXPECT_NE(parts[(*tri)[1]], parts[(*tri)[2]]);
  EXPECT_NE(parts[(*tri)[0]], parts[(*tri)[2]]);
  EXPECT_EQ(clique_check(gen::complete(4), 4), (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_THROW(clique_check(t, 5), PreconditionError);
}

TEST(CliqueCheck, AgreesWithBruteForceOnSmallGraphs) {
  for (const Graph& g : load_corpus("all_graphs_n1_8.g6")) {
    bool k3 = false, k4 = false;
    const std::size_t n = g.n();
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        for (Vertex c = b + 1; c < n; ++c) {
          if (!(g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c))) continue;
          k3 = true;
          for (Vertex d = c + 1; d < n; ++d) k4 = k4 || (g.adjacent(a, d) && g.adjacent(b, d) && g.adjacent(c, d));
        }
    ASSERT_EQ(is_triangle_free(g), !k3) << to_graph6(g);
    ASSERT_EQ(is_k4_free(g), !k4) << to_graph6(g);
  }
}

TEST(TriangleStats, Examples) {
  const TriangleStats k3 = triangle_stats(gen::complete(3));
  EXPECT_EQ(k3.triangle_total, 1u);
  for (auto [u, v] : k3.edges) EXPECT_EQ(k3.codegree(u, v), 1u);
  EXPECT_EQ(triangle_stats(gen::petersen()).triangle_total, 0u);
  EXPECT_EQ(triangle_stats(gen::turan(3, 6)).triangle_total, 8u);
  EXPECT_THROW(k3.codegree(0, 0), PreconditionError);
}

TEST(TriangleStats, Invariants) {
  for (const Graph& g : sample_graphs()) {
    const TriangleStats st = triangle_stats(g);
    std::uint64_t neigh = 0;
    for (Vertex v = 0; v < g.n(); ++v) neigh += edges_within(g, g.neighbors(v));
    EXPECT_EQ(3 * st.triangle_total, neigh);
    EXPECT_EQ(st.triangles.size(), st.triangle_total);
    for (const auto& t : st.triangles) {
      EXPECT_TRUE(g.adjacent(t[0], t[1]) && g.adjacent(t[1], t[2]) && g.adjacent(t[0], t[2]));
      EXPECT_LT(t[0], t[1]);
      EXPECT_LT(t[1], t[2]);
    }
    for (std::size_t i = 0; i < st.edges.size(); ++i) {
      auto [u, v] = st.edges[i];
      EXPECT_EQ(st.edge_codegree[i], codegree(g, u, v));
      EXPECT_EQ(codegree(g, u, v), codegree(g, v, u));
      EXPECT_EQ(st.codegree(v, u), st.edge_codegree[i]);
    }
  }
}

TEST(Generators, TuranSixIsK222) {
  const Graph g = gen::turan(3, 6);
  EXPECT_EQ(g.edge_count(), 12u);
  EXPECT_TRUE(g.is_regular());
  EXPECT_EQ(g.degree(0), 4u);
}

TEST(Generators, TuranPartsDifferByAtMostOne) {
  EXPECT_EQ(gen::turan_parts(3, 7), (std::vector<std::size_t>{0, 0, 0, 1, 1, 2, 2}));
  for (std::size_t n = 1; n < 20; ++n) {
    const auto parts = gen::turan_parts(3, n);
    std::array<std::size_t, 3> sizes{};
    for (auto p : parts) ++sizes[p];
    EXPECT_LE(*std::max_element(sizes.begin(), sizes.end()) - *std::min_element(sizes.begin(), sizes.end()), 1u);
    EXPECT_TRUE(is_k4_free(gen::turan(3, n)));
  }
}

TEST(Generators, C5BlowUp) {
  const Graph g = gen::blow_up(gen::c5(), 2);
  EXPECT_EQ(g.n(), 10u);
  EXPECT_EQ(g.edge_count(), 20u);
  EXPECT_TRUE(g.is_regular());
  EXPECT_EQ(g.degree(0), 4u);
  EXPECT_TRUE(is_triangle_free(g));
}

TEST(Generators, IdentityBlowUp) {
  for (const Graph& g : {gen::petersen(), gen::c5(), gen::turan(3, 7)}) EXPECT_EQ(gen::blow_up(g, 1), g);
}

TEST(Generators, BlowUpPreservesK4FreenessAndRegularity) {
  for (const Graph& base : {gen::c5(), gen::petersen(), gen::turan(3, 6), gen::clebsch()}) {
    for (std::size_t s = 1; s <= 3; ++s) {
      const Graph g = gen::blow_up(base, s);
      EXPECT_TRUE(is_k4_free(g));
      EXPECT_TRUE(g.is_regular());
      EXPECT_EQ(g.edge_count(), s * s * base.edge_count());
    }
  }
}

TEST(Generators, NamedGraphs) {
  const Graph p = gen::petersen();
  EXPECT_EQ(p.n(), 10u);
  EXPECT_EQ(p.edge_count(), 15u);
  EXPECT_TRUE(p.is_regular());
  EXPECT_EQ(independence_number(p), 4u);
  const Graph c = gen::clebsch();
  EXPECT_EQ(c.n(), 16u);
  EXPECT_EQ(c.degree(0), 5u);
  EXPECT_TRUE(c.is_regular());
  EXPECT_TRUE(is_triangle_free(c));
  const Graph q = gen::hypercube(4);
  EXPECT_EQ(q.edge_count(), 32u);
  EXPECT_TRUE(is_bipartite(q));
}

TEST(Graph6, SmallestEncoding) {
  EXPECT_EQ(to_graph6(Graph::from_edges(1, {})), "@");
  EXPECT_EQ(parse_graph6("@").n(), 1u);
}

TEST(Graph6, PetersenRoundTrip) {
  const Graph p = gen::petersen();
  EXPECT_EQ(parse_graph6(to_graph6(p)), p);
}

// Reference lines: graph6, n, edge list, produced by an independent encoder.
TEST(Graph6, MatchesReferenceEncoder) {
  std::ifstream in(testsupport::data_path("graph6_reference.txt"));
  ASSERT_TRUE(in);
  std::string line;
  int checked = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string g6, edges_field;
    std::size_t n = 0;
    std::getline(ls, g6, '\t');
    ls >> n;
    ls.ignore(1);
    std::getline(ls, edges_field);
    std::vector<Edge> edges;
    std::istringstream es(edges_field);
    std::string tok;
    while (es >> tok) {
      const auto dash = tok.find('-');
      edges.push_back({static_cast<Vertex>(std::stoul(tok.substr(0, dash))),
                       static_cast<Vertex>(std::stoul(tok.substr(dash + 1)))});
    }
    const Graph expected = Graph::from_edges(n, edges);
    EXPECT_EQ(parse_graph6(g6), expected) << g6;
    EXPECT_EQ(to_graph6(expected), g6);
    ++checked;
  }
  EXPECT_GT(checked, 40);
}

TEST(Graph6, CorpusRoundTrip) {
  for (const Graph& g : load_corpus("all_graphs_n1_8.g6")) ASSERT_EQ(parse_graph6(to_graph6(g)), g);
}

TEST(Graph6, LargeGraphRoundTrip) {
  const Graph g = gen::blow_up(gen::petersen(), 7);  // 70 vertices, long-form header not needed
  EXPECT_EQ(parse_graph6(to_graph6(g)), g);
  const Graph h = gen::turan(3, 100);  // n >= 63 uses the 4-byte header
  EXPECT_EQ(parse_graph6(to_graph6(h)), h);
}

TEST(Graph6, Malformed) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("D?"), ParseError);
  EXPECT_THROW(parse_graph6("D\x01\x01"), ParseError);
  std::istringstream in("D?{\nbroken!!\n");
  try {
    read_graph6(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Graph6, ReaderSkipsBlankLines) {
  std::istringstream in("\nD?{\n\n@\n");
  EXPECT_EQ(read_graph6(in).size(), 2u);
}

TEST(Maximalize, TuranUnchanged) {
  for (std::size_t n : {6, 7, 9, 12}) EXPECT_EQ(maximalize_k4free(gen::turan(3, n)), gen::turan(3, n));
}

TEST(Maximalize, PredicateHolds) {
  std::mt19937_64 rng(3);
  std::vector<Graph> inputs = {Graph::from_edges(4, {}), gen::c5(), gen::petersen(), gen::blow_up(gen::c5(), 2)};
  for (int i = 0; i < 20; ++i) inputs.push_back(testsupport::random_kr_free(rng, 5 + i % 10, 4, 0.5));
  for (const Graph& g : inputs) {
    const Graph h = maximalize_k4free(g);
    EXPECT_TRUE(is_k4_free(h));
    EXPECT_TRUE(is_maximal_k4free(h));
    for (auto [u, v] : g.edges()) EXPECT_TRUE(h.adjacent(u, v));
    for (Vertex u = 0; u < h.n(); ++u)
      for (Vertex v = u + 1; v < h.n(); ++v)
        if (!h.adjacent(u, v)) EXPECT_FALSE(is_k4_free(h.with_edge(u, v)));
  }
  EXPECT_THROW(maximalize_k4free(gen::complete(4)), PreconditionError);
}

TEST(JoinDecompose, Turan) {
  const auto j = join_decompose(gen::turan(3, 9));
  ASSERT_TRUE(j);
  EXPECT_EQ(j->independent, VertexSubset(9, {0, 1, 2}));
  EXPECT_EQ(j->gamma, gen::turan(2, 6));
}

TEST(JoinDecompose, C5HasNone) { EXPECT_FALSE(join_decompose(gen::c5())); }

TEST(JoinDecompose, StarPrefersLargerIndependentSide) {
  const auto j = join_decompose(star(4));
  ASSERT_TRUE(j);
  EXPECT_EQ(j->independent, VertexSubset(5, {1, 2, 3, 4}));
  EXPECT_EQ(j->gamma.n(), 1u);
}

TEST(JoinDecompose, JoinProperties) {
  std::vector<Graph> inputs = {gen::turan(3, 12), gen::turan(4, 8), star(6)};
  for (const Graph& g : load_corpus("all_graphs_n1_8.g6"))
    if (g.n() == 7) inputs.push_back(g);
  for (const Graph& g : inputs) {
    const auto j = join_decompose(g);
    if (!j) continue;
    EXPECT_EQ(edges_within(g, j->independent), 0u);
    EXPECT_EQ(edges_between(g, j->independent, j->rest), j->independent.size() * j->rest.size());
    EXPECT_EQ(j->gamma, g.induced(j->rest));
  }
}

TEST(IndependentSet, Examples) {
  const auto k222 = independent_set_search(gen::turan(3, 6), 2);
  ASSERT_TRUE(k222);
  EXPECT_EQ(edges_within(gen::turan(3, 6), *k222), 0u);
  EXPECT_TRUE(independent_set_search(gen::petersen(), 4));
  EXPECT_FALSE(independent_set_search(gen::petersen(), 5));
  EXPECT_FALSE(independent_set_search(gen::complete(4), 2));
}

TEST(IndependentSet, MatchesBruteForce) {
  for (const Graph& g : load_corpus("all_graphs_n1_8.g6")) {
    if (g.n() != 8) continue;
    const auto adj = testsupport::masks(g);
    std::size_t alpha = 0;
    for (std::uint64_t s = 0; s < 256; ++s)
      if (testsupport::edges_in_mask(adj, s) == 0) alpha = std::max<std::size_t>(alpha, std::popcount(s));
    ASSERT_EQ(independence_number(g), alpha) << to_graph6(g);
  }
}

TEST(Predicates, Multipartite) {
  EXPECT_TRUE(is_balanced_complete_multipartite(gen::turan(3, 12), 3));
  EXPECT_FALSE(is_balanced_complete_multipartite(gen::turan(3, 13), 3));
  EXPECT_FALSE(is_balanced_complete_multipartite(gen::turan(2, 12), 3));
  std::size_t parts = 0;
  EXPECT_TRUE(is_complete_multipartite(gen::turan(4, 10), &parts));
  EXPECT_EQ(parts, 4u);
  EXPECT_FALSE(is_complete_multipartite(gen::c5()));
  EXPECT_TRUE(is_bipartite(gen::cycle(6)));
  EXPECT_FALSE(is_bipartite(gen::c5()));
  EXPECT_TRUE(is_connected(gen::petersen()));
  EXPECT_FALSE(is_connected(Graph::from_edges(3, {{0, 1}})));
}
