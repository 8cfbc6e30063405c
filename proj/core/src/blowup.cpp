#include "sparsehalf/blowup.hpp"

#include <string>
#include <vector>

#include "sparsehalf/errors.hpp"

namespace sparsehalf {
namespace {

void validate(const Graph& h, std::span<const VertexSubset> blocks) {
  const std::size_t n = h.n();
  VertexSubset seen(n);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const VertexSubset& b = blocks[i];
    if (b.universe() != n) throw PreconditionError("block universe does not match graph");
    if (b.empty()) throw PreconditionError("block " + std::to_string(i) + " is empty");
    if (!b.disjoint(seen)) throw PreconditionError("blocks overlap");
    seen |= b;
    const Vertex first = static_cast<Vertex>(b.bits().first());
    b.bits().for_each([&](Vertex v) {
      if (!(h.row(v) == h.row(first)))
        throw PreconditionError("block " + std::to_string(i) + " is not a twin class");
    });
    if (h.row(first).intersects(b.bits())) throw PreconditionError("block " + std::to_string(i) + " is not independent");
  }
  if (seen.size() != n) throw PreconditionError("blocks do not cover the graph");
}

// Moves `count` vertices of block `from` out of S and `count` vertices of
// block `to` into S, lowest ids first.
void shift(VertexSubset& s, const VertexSubset& from, const VertexSubset& to, std::size_t count) {
  std::size_t out = 0;
  from.bits().for_each([&](Vertex v) {
    if (out < count && s.contains(v)) {
      s.erase(v);
      ++out;
    }
  });
  std::size_t in = 0;
  to.bits().for_each([&](Vertex v) {
    if (in < count && !s.contains(v)) {
      s.insert(v);
      ++in;
    }
  });
}

}  // namespace

std::size_t fractional_blocks(std::span<const VertexSubset> blocks, const VertexSubset& s) {
  std::size_t k = 0;
  for (const auto& b : blocks) {
    const std::size_t m = b.bits().count_and(s.bits());
    if (m != 0 && m != b.size()) ++k;
  }
  return k;
}

VertexSubset blow_up_round(const Graph& h, std::span<const VertexSubset> blocks, const VertexSubset& s) {
  validate(h, blocks);
  if (s.universe() != h.n()) throw PreconditionError("subset universe does not match graph");
  VertexSubset cur = s;
  while (true) {
    std::vector<std::size_t> frac;
    for (std::size_t i = 0; i < blocks.size() && frac.size() < 2; ++i) {
      const std::size_t m = blocks[i].bits().count_and(cur.bits());
      if (m != 0 && m != blocks[i].size()) frac.push_back(i);
    }
    if (frac.size() < 2) return cur;
    const VertexSubset& bi = blocks[frac[0]];
    const VertexSubset& bj = blocks[frac[1]];
    const std::size_t si = bi.bits().count_and(cur.bits());
    const std::size_t sj = bj.bits().count_and(cur.bits());
    // Fill block i from block j, or fill block j from block i.
    VertexSubset toward_i = cur;
    shift(toward_i, bj, bi, std::min(bi.size() - si, sj));
    VertexSubset toward_j = cur;
    shift(toward_j, bi, bj, std::min(bj.size() - sj, si));
    cur = edges_within(h, toward_i) <= edges_within(h, toward_j) ? std::move(toward_i) : std::move(toward_j);
  }
}

}  // namespace sparsehalf
