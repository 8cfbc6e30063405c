#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sparsehalf/graph.hpp"

namespace sparsehalf::gen {

/// Balanced complete k-partite graph T_k(n). Parts are consecutive id
/// ranges; the first n mod k parts get the extra vertex.
Graph turan(std::size_t parts, std::size_t n);

/// Part index of every vertex of turan(parts, n).
std::vector<std::size_t> turan_parts(std::size_t parts, std::size_t n);

/// Replaces vertex i by an independent block of sizes[i] vertices and each
/// edge by a complete bipartite bundle. Blocks are consecutive id ranges.
Graph blow_up(const Graph& base, std::span<const std::size_t> sizes);
Graph blow_up(const Graph& base, std::size_t uniform_size);

/// Vertex blocks of blow_up(base, sizes), in base-vertex order.
std::vector<VertexSubset> blow_up_blocks(std::span<const std::size_t> sizes);

Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph c5();
Graph petersen();
/// Circulant graph on Z_n joining i and i +- j for each jump j.
Graph circulant(std::size_t n, std::span<const std::size_t> jumps);
Graph hypercube(std::size_t dim);
/// Folded 5-cube: 16 vertices, 5-regular, triangle-free.
Graph clebsch();

}  // namespace sparsehalf::gen
