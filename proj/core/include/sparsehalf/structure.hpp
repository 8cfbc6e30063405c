#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sparsehalf/graph.hpp"

namespace sparsehalf {

/// Returns a K_r (r in {3,4}) as a sorted vertex list, or nullopt when G is
/// K_r-free. Throws PreconditionError for other r.
std::optional<std::vector<Vertex>> clique_check(const Graph& g, int r);

inline bool is_triangle_free(const Graph& g) { return !clique_check(g, 3); }
inline bool is_k4_free(const Graph& g) { return !clique_check(g, 4); }

using Triangle = std::array<Vertex, 3>;

struct TriangleStats {
  std::uint64_t triangle_total = 0;
  /// Sorted triples, lexicographic order.
  std::vector<Triangle> triangles;
  /// Edges of G (u < v, lexicographic) and d(uv) = |N(u) & N(v)| for each.
  std::vector<Edge> edges;
  std::vector<std::uint32_t> edge_codegree;

  /// d(uv) for an edge; throws PreconditionError for a non-edge.
  std::uint32_t codegree(Vertex u, Vertex v) const;
};

TriangleStats triangle_stats(const Graph& g);

/// |N(u) & N(v)| for any pair.
std::size_t codegree(const Graph& g, Vertex u, Vertex v);

/// Adds non-edges in lexicographic order whenever doing so keeps G K4-free.
/// The result contains G, is K4-free, and every remaining non-edge closes a
/// K4. Throws PreconditionError if G already contains a K4.
Graph maximalize_k4free(const Graph& g);

/// True when G is K4-free and adding any non-edge creates a K4.
bool is_maximal_k4free(const Graph& g);

struct JoinSplit {
  VertexSubset independent;  // I
  VertexSubset rest;         // V(Gamma)
  Graph gamma;               // G[rest], relabelled
  std::vector<Vertex> gamma_ids;  // original id of each Gamma vertex
};

/// Splits G as I v Gamma with I independent, when the complement of G is
/// disconnected. I is the largest complement component that is independent
/// in G (ties: smallest least id). nullopt when the complement is connected
/// or no component is independent.
std::optional<JoinSplit> join_decompose(const Graph& g);

struct IndependentSetOptions {
  /// Complete search at or below this many vertices, heuristic above.
  std::size_t exact_threshold = 40;
  std::size_t heuristic_restarts = 64;
  std::uint64_t seed = 0x5eed;
};

/// An independent set of exactly `target` vertices, or nullopt. nullopt is
/// definitive only when n <= exact_threshold.
std::optional<VertexSubset> independent_set_search(const Graph& g, std::size_t target,
                                                   const IndependentSetOptions& opts = {});

/// Independence number by complete search (n <= 64).
std::size_t independence_number(const Graph& g);

/// True when V splits into `parts` equal-size independent sets with all
/// cross pairs adjacent, i.e. G is T_parts(n) with parts | n.
bool is_balanced_complete_multipartite(const Graph& g, std::size_t parts);

/// True when the complement components are independent in G (G is complete
/// multipartite); fills the part count.
bool is_complete_multipartite(const Graph& g, std::size_t* parts = nullptr);

bool is_bipartite(const Graph& g, VertexSubset* side = nullptr);

bool is_connected(const Graph& g);

}  // namespace sparsehalf
