#pragma once

// Simple undirected graphs whose vertices are identified with the variables
// of the ambient polynomial ring. Vertex i (0-based in the API) is x_{i+1}.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bpow/monomial.hpp"

namespace bpow {

/// An edge {first, second} with first < second.
struct Edge {
  std::size_t first;
  std::size_t second;

  Edge(std::size_t a, std::size_t b);

  bool contains(std::size_t v) const noexcept { return first == v || second == v; }
  std::size_t other(std::size_t v) const noexcept { return v == first ? second : first; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  /// Edgeless graph on `n` vertices.
  explicit Graph(std::size_t n = 1);
  Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph complete(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Edges in lexicographic order.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool adjacent(std::size_t a, std::size_t b) const;
  /// N_G(v) as a bitmask (n <= 64).
  std::uint64_t neighbor_mask(std::size_t v) const { return adj_.at(v); }
  std::vector<std::size_t> neighbors(std::size_t v) const;

  void add_edge(std::size_t a, std::size_t b);

  std::string to_string() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

/// The squarefree quadric x_a x_b in `n` variables.
Monomial edge_monomial(std::size_t n, const Edge& e);
MonomialIdeal edge_ideal(const Graph& g);
Graph complement(const Graph& g);
/// G \ U. Deleted vertices stay in the ambient as isolated vertices.
Graph delete_vertices(const Graph& g, const std::vector<std::size_t>& removed);
/// Relabels the survivors of G \ U to 0..n-|U|-1 preserving order.
Graph compact_delete_vertices(const Graph& g, const std::vector<std::size_t>& removed);

/// Chordality via maximum cardinality search and a perfect elimination check.
bool is_chordal(const Graph& g);
/// Maximum size of a set of pairwise disjoint edges.
std::size_t matching_number(const Graph& g);

/// graph6 decoding. Accepts an optional ">>graph6<<" header and a trailing
/// newline; throws ParseError with the offending byte offset otherwise.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

/// Number of vertex pairs, i.e. the bit length of a labeled-graph index.
std::size_t pair_count(std::size_t n);
/// The labeled graph on n vertices with edge set encoded by `index`: bit t
/// is the t-th pair in graph6 order (0,1), (0,2), (1,2), (0,3), ...
Graph labeled_graph(std::size_t n, std::uint64_t index);

/// Restartable enumeration of all 2^(n choose 2) labeled graphs in index
/// order. `[begin, end)` selects a shard of the index range.
class LabeledGraphRange {
 public:
  explicit LabeledGraphRange(std::size_t n);
  LabeledGraphRange(std::size_t n, std::uint64_t begin, std::uint64_t end);

  std::uint64_t size() const noexcept { return end_ - begin_; }
  Graph operator[](std::uint64_t offset) const { return labeled_graph(n_, begin_ + offset); }

  class iterator {
   public:
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;
    iterator(std::size_t n, std::uint64_t index) : n_(n), index_(index) {}
    Graph operator*() const { return labeled_graph(n_, index_); }
    iterator& operator++() { ++index_; return *this; }
    iterator operator++(int) { auto t = *this; ++index_; return t; }
    friend bool operator==(const iterator&, const iterator&) = default;

   private:
    std::size_t n_;
    std::uint64_t index_;
  };

  iterator begin() const { return {n_, begin_}; }
  iterator end() const { return {n_, end_}; }

 private:
  std::size_t n_;
  std::uint64_t begin_;
  std::uint64_t end_;
};

inline LabeledGraphRange enumerate_labeled_graphs(std::size_t n) {
  return LabeledGraphRange(n);
}

}  // namespace bpow
