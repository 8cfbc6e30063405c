#include "sparsehalf/graph.hpp"

#include <algorithm>
#include <string>

#include "sparsehalf/errors.hpp"

namespace sparsehalf {

VertexSubset::VertexSubset(std::size_t universe, std::initializer_list<Vertex> ids)
    : VertexSubset(universe, std::span<const Vertex>(ids.begin(), ids.size())) {}

VertexSubset::VertexSubset(std::size_t universe, std::span<const Vertex> ids) : bits_(universe) {
  for (Vertex v : ids) insert(v);
}

VertexSubset VertexSubset::full(std::size_t universe) {
  return VertexSubset(BitRow(universe).flipped());
}

void VertexSubset::insert(Vertex v) {
  if (v >= bits_.size())
    throw PreconditionError("vertex " + std::to_string(v) + " outside universe of size " +
                            std::to_string(bits_.size()));
  if (!bits_.test(v)) {
    bits_.set(v);
    ++size_;
  }
}

void VertexSubset::erase(Vertex v) {
  if (v < bits_.size() && bits_.test(v)) {
    bits_.reset(v);
    --size_;
  }
}

std::vector<Vertex> VertexSubset::members() const {
  std::vector<Vertex> out;
  out.reserve(size_);
  bits_.for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

bool VertexSubset::subset_of(const VertexSubset& o) const {
  if (o.universe() != universe()) return false;
  return bits_.count_and(o.bits_) == size_;
}

VertexSubset& VertexSubset::operator|=(const VertexSubset& o) {
  bits_ |= o.bits_;
  size_ = bits_.count();
  return *this;
}

VertexSubset& VertexSubset::operator-=(const VertexSubset& o) {
  bits_.subtract(o.bits_);
  size_ = bits_.count();
  return *this;
}

std::strong_ordering lex_compare(const VertexSubset& a, const VertexSubset& b) {
  std::size_t i = a.bits_.first();
  std::size_t j = b.bits_.first();
  while (i < a.universe() && j < b.universe()) {
    if (i != j) return i < j ? std::strong_ordering::less : std::strong_ordering::greater;
    i = a.bits_.next(i + 1);
    j = b.bits_.next(j + 1);
  }
  bool a_done = i >= a.universe();
  bool b_done = j >= b.universe();
  if (a_done && b_done) return std::strong_ordering::equal;
  return a_done ? std::strong_ordering::less : std::strong_ordering::greater;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::size_t cap) {
  if (n > cap)
    throw PreconditionError("graph on " + std::to_string(n) + " vertices exceeds cap " +
                            std::to_string(cap));
  Graph g;
  g.rows_.assign(n, BitRow(n));
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") out of range for n=" + std::to_string(n));
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    g.rows_[u].set(v);
    g.rows_[v].set(u);
  }
  g.recount();
  return g;
}

Graph Graph::from_rows(std::vector<BitRow> rows) {
  Graph g;
  g.rows_ = std::move(rows);
  const std::size_t n = g.rows_.size();
  for (std::size_t u = 0; u < n; ++u) {
    if (g.rows_[u].size() != n) throw PreconditionError("adjacency row width mismatch");
    if (g.rows_[u].test(u)) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    g.rows_[u].for_each([&](Vertex v) {
      if (!g.rows_[v].test(u)) throw PreconditionError("adjacency rows are not symmetric");
    });
  }
  g.recount();
  return g;
}

void Graph::recount() {
  degrees_.resize(rows_.size());
  std::uint64_t total = 0;
  for (std::size_t v = 0; v < rows_.size(); ++v) {
    degrees_[v] = rows_[v].count();
    total += degrees_[v];
  }
  edge_count_ = total / 2;
}

Rational Graph::density() const {
  if (n() == 0) return Rational(0);
  return Rational(static_cast<std::int64_t>(edge_count_)) /
         Rational(static_cast<std::int64_t>(n() * n()));
}

std::size_t Graph::min_degree() const {
  return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

std::size_t Graph::max_degree() const {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n(); ++u)
    rows_[u].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

Graph Graph::induced(const VertexSubset& keep, std::vector<Vertex>* ids) const {
  std::vector<Vertex> old_ids = keep.members();
  std::vector<Vertex> new_id(n(), 0);
  for (std::size_t i = 0; i < old_ids.size(); ++i) new_id[old_ids[i]] = static_cast<Vertex>(i);
  std::vector<BitRow> rows(old_ids.size(), BitRow(old_ids.size()));
  for (std::size_t i = 0; i < old_ids.size(); ++i) {
    BitRow r = rows_[old_ids[i]] & keep.bits();
    r.for_each([&](Vertex w) { rows[i].set(new_id[w]); });
  }
  if (ids) *ids = std::move(old_ids);
  Graph g;
  g.rows_ = std::move(rows);
  g.recount();
  return g;
}

Graph Graph::complement() const {
  Graph g;
  g.rows_.reserve(n());
  for (Vertex v = 0; v < n(); ++v) {
    BitRow r = rows_[v].flipped();
    r.reset(v);
    g.rows_.push_back(std::move(r));
  }
  g.recount();
  return g;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  if (u >= n() || v >= n() || u == v) throw PreconditionError("invalid edge for with_edge");
  Graph g = *this;
  if (!g.rows_[u].test(v)) {
    g.rows_[u].set(v);
    g.rows_[v].set(u);
    ++g.degrees_[u];
    ++g.degrees_[v];
    ++g.edge_count_;
  }
  return g;
}

std::uint64_t edges_within(const Graph& g, const VertexSubset& s) {
  std::uint64_t twice = 0;
  s.bits().for_each([&](Vertex v) { twice += g.row(v).count_and(s.bits()); });
  return twice / 2;
}

std::uint64_t edges_between(const Graph& g, const VertexSubset& s, const VertexSubset& t) {
  if (!s.disjoint(t)) throw PreconditionError("e(S,T) requires disjoint S and T");
  std::uint64_t total = 0;
  s.bits().for_each([&](Vertex v) { total += g.row(v).count_and(t.bits()); });
  return total;
}

EdgeCounts edge_counts(const Graph& g, const VertexSubset& s, const VertexSubset* t) {
  if (s.universe() != g.n()) throw PreconditionError("subset universe does not match graph");
  EdgeCounts out;
  if (t) {
    if (t->universe() != g.n()) throw PreconditionError("subset universe does not match graph");
    out.between = edges_between(g, s, *t);
  }
  out.within = edges_within(g, s);
  return out;
}

}  // namespace sparsehalf
