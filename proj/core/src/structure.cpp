#include "sparsehalf/structure.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <random>
#include <string>

#include "sparsehalf/errors.hpp"

namespace sparsehalf {
namespace {

using Mask = std::uint64_t;

std::vector<Mask> complement_masks(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<Mask> comp(n, 0);
  const Mask all = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
  for (Vertex v = 0; v < n; ++v) {
    Mask row = g.row(v).words().empty() ? 0 : g.row(v).words()[0];
    comp[v] = all & ~row & ~(Mask{1} << v);
  }
  return comp;
}

// Branch and bound for cliques in the graph given by `adj`, with a greedy
// colouring bound. Target mode stops at the first clique of `target`
// vertices; maximum mode finds a largest clique.
class CliqueSearch {
 public:
  explicit CliqueSearch(const std::vector<Mask>& adj) : adj_(adj) {}

  bool find(Mask candidates, std::size_t target) {
    target_ = target;
    current_ = 0;
    return expand(candidates, 0);
  }
  void maximum(Mask candidates) {
    target_ = 0;
    current_ = 0;
    expand(candidates, 0);
  }
  Mask best() const { return best_; }
  std::size_t best_size() const { return best_size_; }

 private:
  bool expand(Mask cand, std::size_t depth) {
    if (depth > best_size_) {
      best_size_ = depth;
      best_ = current_;
    }
    if (target_ && depth >= target_) return true;
    std::vector<int> order;
    std::vector<std::size_t> colour;
    Mask uncoloured = cand;
    std::size_t c = 0;
    while (uncoloured) {
      ++c;
      Mask q = uncoloured;
      while (q) {
        int v = std::countr_zero(q);
        q &= ~(Mask{1} << v);
        q &= ~adj_[v];
        uncoloured &= ~(Mask{1} << v);
        order.push_back(v);
        colour.push_back(c);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      const std::size_t bound = depth + colour[i];
      if (target_ ? bound < target_ : bound <= best_size_) return false;
      const int v = order[i];
      current_ |= Mask{1} << v;
      if (expand(cand & adj_[v], depth + 1)) return true;
      current_ &= ~(Mask{1} << v);
      cand &= ~(Mask{1} << v);
    }
    return false;
  }

  const std::vector<Mask>& adj_;
  std::size_t target_ = 0;
  Mask current_ = 0;
  Mask best_ = 0;
  std::size_t best_size_ = 0;
};

VertexSubset from_mask(std::size_t n, Mask m) {
  VertexSubset s(n);
  while (m) {
    int v = std::countr_zero(m);
    s.insert(static_cast<Vertex>(v));
    m &= m - 1;
  }
  return s;
}

std::vector<VertexSubset> complement_components(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<VertexSubset> comps;
  BitRow unseen = BitRow(n).flipped();
  while (!unseen.none()) {
    Vertex start = static_cast<Vertex>(unseen.first());
    VertexSubset comp(n);
    std::deque<Vertex> queue{start};
    unseen.reset(start);
    comp.insert(start);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      BitRow non_nbrs = g.row(v).flipped();
      non_nbrs &= unseen;
      non_nbrs.for_each([&](Vertex w) {
        unseen.reset(w);
        comp.insert(w);
        queue.push_back(w);
      });
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

std::optional<std::vector<Vertex>> clique_check(const Graph& g, int r) {
  if (r != 3 && r != 4) throw PreconditionError("clique_check supports r = 3 or 4, got " + std::to_string(r));
  for (Vertex u = 0; u < g.n(); ++u) {
    std::optional<std::vector<Vertex>> hit;
    g.row(u).for_each([&](Vertex v) {
      if (hit || v <= u) return;
      BitRow common = g.row(u) & g.row(v);
      common.for_each([&](Vertex w) {
        if (hit || w <= v) return;
        if (r == 3) {
          hit = std::vector<Vertex>{u, v, w};
          return;
        }
        BitRow inner = common & g.row(w);
        std::size_t x = inner.next(w + 1);
        if (x < g.n()) hit = std::vector<Vertex>{u, v, w, static_cast<Vertex>(x)};
      });
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

std::uint32_t TriangleStats::codegree(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), Edge{u, v});
  if (it == edges.end() || *it != Edge{u, v})
    throw PreconditionError("codegree lookup on a non-edge");
  return edge_codegree[static_cast<std::size_t>(it - edges.begin())];
}

std::size_t codegree(const Graph& g, Vertex u, Vertex v) { return g.row(u).count_and(g.row(v)); }

TriangleStats triangle_stats(const Graph& g) {
  TriangleStats st;
  st.edges = g.edges();
  st.edge_codegree.reserve(st.edges.size());
  for (auto [u, v] : st.edges) {
    BitRow common = g.row(u) & g.row(v);
    st.edge_codegree.push_back(static_cast<std::uint32_t>(common.count()));
    common.for_each([&](Vertex w) {
      if (w > v) st.triangles.push_back(Triangle{u, v, w});
    });
  }
  st.triangle_total = st.triangles.size();
  return st;
}

Graph maximalize_k4free(const Graph& g) {
  if (auto k4 = clique_check(g, 4))
    throw PreconditionError("maximalize_k4free: input contains a K4");
  Graph h = g;
  const std::size_t n = g.n();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (h.adjacent(u, v)) continue;
      BitRow common = h.row(u) & h.row(v);
      bool closes = false;
      common.for_each([&](Vertex w) {
        if (!closes && h.row(w).intersects(common)) closes = true;
      });
      if (!closes) h = h.with_edge(u, v);
    }
  }
  return h;
}

bool is_maximal_k4free(const Graph& g) {
  if (clique_check(g, 4)) return false;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (g.adjacent(u, v)) continue;
      BitRow common = g.row(u) & g.row(v);
      bool closes = false;
      common.for_each([&](Vertex w) {
        if (!closes && g.row(w).intersects(common)) closes = true;
      });
      if (!closes) return false;
    }
  return true;
}

std::optional<JoinSplit> join_decompose(const Graph& g) {
  if (g.n() < 2) return std::nullopt;
  auto comps = complement_components(g);
  if (comps.size() < 2) return std::nullopt;
  const VertexSubset* pick = nullptr;
  for (const auto& c : comps) {
    if (edges_within(g, c) != 0) continue;
    // components are discovered in order of least id, so ties keep the first
    if (!pick || c.size() > pick->size()) pick = &c;
  }
  if (!pick) return std::nullopt;
  JoinSplit split;
  split.independent = *pick;
  split.rest = pick->complement();
  split.gamma = g.induced(split.rest, &split.gamma_ids);
  return split;
}

std::size_t independence_number(const Graph& g) {
  if (g.n() > 64) throw PreconditionError("independence_number supports n <= 64");
  if (g.n() == 0) return 0;
  auto comp = complement_masks(g);
  CliqueSearch search(comp);
  const Mask all = g.n() == 64 ? ~Mask{0} : ((Mask{1} << g.n()) - 1);
  search.maximum(all);
  return search.best_size();
}

std::optional<VertexSubset> independent_set_search(const Graph& g, std::size_t target,
                                                   const IndependentSetOptions& opts) {
  if (target == 0) throw PreconditionError("independent_set_search needs target >= 1");
  const std::size_t n = g.n();
  if (target > n) return std::nullopt;
  if (n <= opts.exact_threshold && n <= 64) {
    auto comp = complement_masks(g);
    CliqueSearch search(comp);
    const Mask all = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
    if (!search.find(all, target)) return std::nullopt;
    return from_mask(n, search.best());
  }
  // Greedy minimum-degree selection over shuffled tie orders.
  std::mt19937_64 rng(opts.seed);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  for (std::size_t round = 0; round < opts.heuristic_restarts; ++round) {
    if (round) std::shuffle(order.begin(), order.end(), rng);
    VertexSubset chosen(n);
    BitRow alive = BitRow(n).flipped();
    while (!alive.none() && chosen.size() < target) {
      Vertex best = 0;
      std::size_t best_deg = SIZE_MAX;
      for (Vertex v : order) {
        if (!alive.test(v)) continue;
        std::size_t d = g.row(v).count_and(alive);
        if (d < best_deg) {
          best_deg = d;
          best = v;
        }
      }
      chosen.insert(best);
      alive.reset(best);
      alive.subtract(g.row(best));
    }
    if (chosen.size() >= target) return chosen;
  }
  return std::nullopt;
}

bool is_complete_multipartite(const Graph& g, std::size_t* parts) {
  auto comps = complement_components(g);
  std::uint64_t inside = 0;
  std::uint64_t pairs = 0;
  for (const auto& c : comps) {
    inside += edges_within(g, c);
    pairs += c.size() * (c.size() - 1) / 2;
  }
  const std::uint64_t n = g.n();
  if (inside != 0) return false;
  // complement components are cliques in the complement iff non-edges = pairs
  const std::uint64_t non_edges = n * (n - (n ? 1 : 0)) / 2 - g.edge_count();
  if (non_edges != pairs) return false;
  if (parts) *parts = comps.size();
  return true;
}

bool is_balanced_complete_multipartite(const Graph& g, std::size_t parts) {
  if (parts == 0 || g.n() % parts != 0) return false;
  std::size_t found = 0;
  if (!is_complete_multipartite(g, &found) || found != parts) return false;
  const std::uint64_t s = g.n() / parts;
  return g.edge_count() == static_cast<std::uint64_t>(parts * (parts - 1) / 2) * s * s;
}

bool is_bipartite(const Graph& g, VertexSubset* side) {
  const std::size_t n = g.n();
  std::vector<int> colour(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      bool ok = true;
      g.row(v).for_each([&](Vertex w) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  if (side) {
    *side = VertexSubset(n);
    for (Vertex v = 0; v < n; ++v)
      if (colour[v] == 0) side->insert(v);
  }
  return true;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.n();
  if (n == 0) return true;
  BitRow seen(n);
  seen.set(0);
  std::deque<Vertex> queue{0};
  std::size_t count = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    g.row(v).for_each([&](Vertex w) {
      if (!seen.test(w)) {
        seen.set(w);
        ++count;
        queue.push_back(w);
      }
    });
  }
  return count == n;
}

}  // namespace sparsehalf
