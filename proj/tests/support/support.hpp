#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sparsehalf/graph.hpp"
#include "sparsehalf/graph6.hpp"
#include "sparsehalf/structure.hpp"

namespace testsupport {

using sparsehalf::Edge;
using sparsehalf::Graph;
using sparsehalf::Vertex;
using sparsehalf::VertexSubset;

inline std::string data_path(const std::string& name) { return std::string(SPARSEHALF_TEST_DATA) + "/" + name; }

inline std::vector<Graph> load_corpus(const std::string& name) {
  std::ifstream in(data_path(name));
  if (!in) throw std::runtime_error("missing corpus " + name);
  return sparsehalf::read_graph6(in);
}

inline std::vector<std::uint64_t> masks(const Graph& g) {
  std::vector<std::uint64_t> m(g.n(), 0);
  for (auto [u, v] : g.edges()) {
    m[u] |= std::uint64_t{1} << v;
    m[v] |= std::uint64_t{1} << u;
  }
  return m;
}

inline std::uint64_t edges_in_mask(const std::vector<std::uint64_t>& adj, std::uint64_t s) {
  std::uint64_t twice = 0;
  for (std::uint64_t r = s; r; r &= r - 1) twice += std::popcount(adj[std::countr_zero(r)] & s);
  return twice / 2;
}

struct NaiveMin {
  std::uint64_t minimum = 0;
  std::uint64_t witness = 0;  // lexicographically smallest attaining k-set
};

// Visits every k-subset with Gosper's hack; no pruning.
inline NaiveMin naive_min_edges(const Graph& g, std::size_t k) {
  const std::size_t n = g.n();
  const auto adj = masks(g);
  if (k == 0) return {0, 0};
  NaiveMin best{~std::uint64_t{0}, 0};
  auto lex_less = [](std::uint64_t a, std::uint64_t b) {
    // Smaller set in sorted-list order: the lowest differing element is in a.
    const std::uint64_t d = a ^ b;
    return d && (a & d & (~d + 1));
  };
  for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < (std::uint64_t{1} << n);) {
    const std::uint64_t e = edges_in_mask(adj, s);
    if (e < best.minimum || (e == best.minimum && lex_less(s, best.witness))) best = {e, s};
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return best;
}

inline VertexSubset subset_of_mask(std::size_t n, std::uint64_t m) {
  VertexSubset s(n);
  for (; m; m &= m - 1) s.insert(static_cast<Vertex>(std::countr_zero(m)));
  return s;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) e.push_back({u, v});
  return Graph::from_edges(n, e);
}

// Random edge order; an edge is kept unless it closes a K_r.
inline Graph random_kr_free(std::mt19937_64& rng, std::size_t n, int r, double keep) {
  std::vector<Edge> all;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
  std::shuffle(all.begin(), all.end(), rng);
  std::bernoulli_distribution coin(keep);
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  std::vector<Edge> kept;
  for (auto [u, v] : all) {
    if (!coin(rng)) continue;
    std::vector<Vertex> common;
    for (Vertex w = 0; w < n; ++w)
      if (a[u][w] && a[v][w]) common.push_back(w);
    bool closes = r == 3 ? !common.empty() : false;
    if (r == 4)
      for (std::size_t i = 0; i < common.size() && !closes; ++i)
        for (std::size_t j = i + 1; j < common.size() && !closes; ++j) closes = a[common[i]][common[j]];
    if (closes) continue;
    a[u][v] = a[v][u] = true;
    kept.push_back({u, v});
  }
  return Graph::from_edges(n, kept);
}

inline VertexSubset random_subset(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<Vertex> ids(n);
  for (Vertex i = 0; i < n; ++i) ids[i] = i;
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(k);
  return VertexSubset(n, std::span<const Vertex>(ids));
}

}  // namespace testsupport
