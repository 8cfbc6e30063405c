#include "sparsehalf/generators.hpp"

#include <numeric>
#include <string>

#include "sparsehalf/errors.hpp"

namespace sparsehalf::gen {

std::vector<std::size_t> turan_parts(std::size_t parts, std::size_t n) {
  if (parts == 0) throw PreconditionError("turan graph needs at least one part");
  std::vector<std::size_t> part_of(n);
  std::size_t v = 0;
  for (std::size_t p = 0; p < parts; ++p) {
    std::size_t size = n / parts + (p < n % parts ? 1 : 0);
    for (std::size_t i = 0; i < size; ++i) part_of[v++] = p;
  }
  return part_of;
}

Graph turan(std::size_t parts, std::size_t n) {
  auto part_of = turan_parts(parts, n);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

std::vector<VertexSubset> blow_up_blocks(std::span<const std::size_t> sizes) {
  const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  std::vector<VertexSubset> blocks;
  Vertex next = 0;
  for (std::size_t s : sizes) {
    VertexSubset b(total);
    for (std::size_t i = 0; i < s; ++i) b.insert(next++);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

Graph blow_up(const Graph& base, std::span<const std::size_t> sizes) {
  if (sizes.size() != base.n())
    throw PreconditionError("blow_up needs one size per base vertex (" + std::to_string(base.n()) +
                            "), got " + std::to_string(sizes.size()));
  for (std::size_t s : sizes)
    if (s == 0) throw PreconditionError("blow_up block sizes must be at least 1");
  std::vector<Vertex> start(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) start[i + 1] = start[i] + static_cast<Vertex>(sizes[i]);
  std::vector<Edge> edges;
  for (auto [a, b] : base.edges())
    for (Vertex u = start[a]; u < start[a + 1]; ++u)
      for (Vertex v = start[b]; v < start[b + 1]; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(start.back(), edges);
}

Graph blow_up(const Graph& base, std::size_t uniform_size) {
  std::vector<std::size_t> sizes(base.n(), uniform_size);
  return blow_up(base, sizes);
}

Graph complete(std::size_t n) { return turan(n == 0 ? 1 : n, n); }

Graph cycle(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph c5() { return cycle(5); }

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph::from_edges(10, edges);
}

Graph circulant(std::size_t n, std::span<const std::size_t> jumps) {
  std::vector<Edge> edges;
  for (std::size_t j : jumps) {
    if (j == 0 || j >= n) throw PreconditionError("circulant jumps must lie in 1..n-1");
    for (Vertex v = 0; v < n; ++v) {
      Vertex w = static_cast<Vertex>((v + j) % n);
      if (v != w) edges.emplace_back(v, w);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph hypercube(std::size_t dim) {
  const std::size_t n = std::size_t{1} << dim;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t b = 0; b < dim; ++b) {
      Vertex w = v ^ (Vertex{1} << b);
      if (v < w) edges.emplace_back(v, w);
    }
  return Graph::from_edges(n, edges);
}

Graph clebsch() {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 16; ++v) {
    for (std::size_t b = 0; b < 4; ++b) {
      Vertex w = v ^ (Vertex{1} << b);
      if (v < w) edges.emplace_back(v, w);
    }
    Vertex antipode = v ^ 15U;
    if (v < antipode) edges.emplace_back(v, antipode);
  }
  return Graph::from_edges(16, edges);
}

}  // namespace sparsehalf::gen
