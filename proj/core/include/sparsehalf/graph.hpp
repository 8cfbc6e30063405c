#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "sparsehalf/rational.hpp"

namespace sparsehalf {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kDefaultVertexCap = 4096;

/// Fixed-width bit row over 0..size-1.
class BitRow {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitRow() = default;
  explicit BitRow(std::size_t bits) : bits_(bits), words_((bits + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const { return bits_; }
  std::span<const Word> words() const { return words_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  std::size_t count_and(const BitRow& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }
  bool intersects(const BitRow& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }
  bool none() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  BitRow& operator&=(const BitRow& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BitRow& operator|=(const BitRow& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  BitRow& subtract(const BitRow& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend BitRow operator&(BitRow a, const BitRow& b) { return a &= b; }
  friend BitRow operator|(BitRow a, const BitRow& b) { return a |= b; }

  /// Bits flipped within 0..size-1.
  BitRow flipped() const {
    BitRow r(bits_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  /// Index of the first set bit at or after `from`, or size() if none.
  std::size_t next(std::size_t from) const {
    if (from >= bits_) return bits_;
    std::size_t wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return bits_;
      w = words_[wi];
    }
  }
  std::size_t first() const { return next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        f(static_cast<Vertex>(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const BitRow&, const BitRow&) = default;

 private:
  void trim() {
    if (bits_ % kWordBits) words_.back() &= (Word{1} << (bits_ % kWordBits)) - 1;
  }

  std::size_t bits_ = 0;
  std::vector<Word> words_;
};

/// Set of vertex ids drawn from 0..universe-1 with cached cardinality.
class VertexSubset {
 public:
  VertexSubset() = default;
  explicit VertexSubset(std::size_t universe) : bits_(universe) {}
  VertexSubset(std::size_t universe, std::initializer_list<Vertex> ids);
  VertexSubset(std::size_t universe, std::span<const Vertex> ids);
  explicit VertexSubset(BitRow bits) : bits_(std::move(bits)), size_(bits_.count()) {}

  static VertexSubset full(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool contains(Vertex v) const { return v < bits_.size() && bits_.test(v); }

  void insert(Vertex v);
  void erase(Vertex v);

  const BitRow& bits() const { return bits_; }
  std::vector<Vertex> members() const;
  VertexSubset complement() const { return VertexSubset(bits_.flipped()); }
  bool disjoint(const VertexSubset& o) const { return !bits_.intersects(o.bits_); }
  bool subset_of(const VertexSubset& o) const;

  VertexSubset& operator|=(const VertexSubset& o);
  VertexSubset& operator-=(const VertexSubset& o);
  friend VertexSubset operator|(VertexSubset a, const VertexSubset& b) { return a |= b; }
  friend VertexSubset operator-(VertexSubset a, const VertexSubset& b) { return a -= b; }

  friend bool operator==(const VertexSubset& a, const VertexSubset& b) { return a.bits_ == b.bits_; }
  /// Lexicographic order of the sorted member lists.
  friend std::strong_ordering lex_compare(const VertexSubset& a, const VertexSubset& b);

 private:
  BitRow bits_;
  std::size_t size_ = 0;
};

/// Immutable undirected simple graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph; duplicate pairs collapse. Throws PreconditionError on
  /// out-of-range ids, self-loops, or n above `cap`.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::size_t cap = kDefaultVertexCap);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  static Graph from_rows(std::vector<BitRow> rows);

  std::size_t n() const { return rows_.size(); }
  std::uint64_t edge_count() const { return edge_count_; }
  /// e(G)/n^2, exact.
  Rational density() const;

  const BitRow& row(Vertex v) const { return rows_[v]; }
  VertexSubset neighbors(Vertex v) const { return VertexSubset(rows_[v]); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  std::size_t degree(Vertex v) const { return degrees_[v]; }
  std::span<const std::size_t> degrees() const { return degrees_; }
  std::size_t min_degree() const;
  std::size_t max_degree() const;
  bool is_regular() const { return n() == 0 || min_degree() == max_degree(); }

  /// Edges (u,v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Induced subgraph; `ids` receives the original id of each new vertex.
  Graph induced(const VertexSubset& keep, std::vector<Vertex>* ids = nullptr) const;
  Graph complement() const;
  Graph with_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  void recount();

  std::vector<BitRow> rows_;
  std::vector<std::size_t> degrees_;
  std::uint64_t edge_count_ = 0;
};

/// e(S): edges with both ends in S.
std::uint64_t edges_within(const Graph& g, const VertexSubset& s);
/// e(S,T) for disjoint S and T. Throws PreconditionError if they overlap.
std::uint64_t edges_between(const Graph& g, const VertexSubset& s, const VertexSubset& t);

struct EdgeCounts {
  std::uint64_t within = 0;
  std::uint64_t between = 0;
};
EdgeCounts edge_counts(const Graph& g, const VertexSubset& s, const VertexSubset* t = nullptr);

}  // namespace sparsehalf
