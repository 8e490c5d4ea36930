#include "bpow/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bpow {

namespace {

constexpr std::size_t kMaxVertices = 64;

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

std::size_t matching_in(const Graph& g, std::uint64_t avail) {
  // Drop vertices with no available neighbour; they can never be matched.
  while (avail) {
    std::size_t v = static_cast<std::size_t>(std::countr_zero(avail));
    std::uint64_t nb = g.neighbor_mask(v) & avail;
    if (!nb) {
      avail &= ~bit(v);
      continue;
    }
    std::size_t best = matching_in(g, avail & ~bit(v));
    const std::uint64_t rest = avail & ~bit(v);
    std::uint64_t upper = static_cast<std::uint64_t>(std::popcount(avail)) / 2;
    for (std::uint64_t m = nb; m && best < upper; m &= m - 1) {
      std::size_t w = static_cast<std::size_t>(std::countr_zero(m));
      best = std::max(best, 1 + matching_in(g, rest & ~bit(w)));
    }
    return best;
  }
  return 0;
}

}  // namespace

Edge::Edge(std::size_t a, std::size_t b)
    : first(std::min(a, b)), second(std::max(a, b)) {
  if (a == b) throw PreconditionError("graph edges must join distinct vertices");
}

Graph::Graph(std::size_t n) : n_(n), adj_(n, 0) {
  if (n == 0) throw PreconditionError("a graph needs at least one vertex");
  if (n > kMaxVertices) throw PreconditionError("graphs are limited to 64 vertices");
}

Graph::Graph(std::size_t n,
             const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : Graph(n) {
  for (auto [a, b] : edges) add_edge(a, b);
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw PreconditionError("a cycle needs at least three vertices");
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

bool Graph::adjacent(std::size_t a, std::size_t b) const {
  return (adj_.at(a) & bit(b)) != 0;
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::uint64_t m = adj_.at(v); m; m &= m - 1)
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (a >= n_ || b >= n_) throw PreconditionError("edge endpoint out of range");
  Edge e(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return;
  edges_.insert(it, e);
  adj_[a] |= bit(b);
  adj_[b] |= bit(a);
}

std::string Graph::to_string() const {
  std::string out = "G(n=" + std::to_string(n_) + "; ";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(edges_[i].first + 1) + "-" + std::to_string(edges_[i].second + 1);
  }
  return out + ")";
}

Monomial edge_monomial(std::size_t n, const Edge& e) {
  std::vector<Exponent> x(n, 0);
  x.at(e.first) = 1;
  x.at(e.second) = 1;
  return Monomial(std::move(x));
}

MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  for (const auto& e : g.edges()) gens.push_back(edge_monomial(g.order(), e));
  return MonomialIdeal::minimalize(g.order(), std::move(gens));
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j)) out.add_edge(i, j);
  return out;
}

Graph delete_vertices(const Graph& g, const std::vector<std::size_t>& removed) {
  std::uint64_t gone = 0;
  for (auto v : removed) {
    if (v >= g.order()) throw PreconditionError("unknown vertex " + std::to_string(v + 1));
    gone |= bit(v);
  }
  Graph out(g.order());
  for (const auto& e : g.edges())
    if (!(gone & (bit(e.first) | bit(e.second)))) out.add_edge(e.first, e.second);
  return out;
}

Graph compact_delete_vertices(const Graph& g, const std::vector<std::size_t>& removed) {
  Graph kept = delete_vertices(g, removed);
  std::vector<std::size_t> relabel(g.order(), g.order());
  std::size_t next = 0;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (std::find(removed.begin(), removed.end(), v) == removed.end()) relabel[v] = next++;
  Graph out(next);
  for (const auto& e : kept.edges()) out.add_edge(relabel[e.first], relabel[e.second]);
  return out;
}

bool is_chordal(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> weight(n, 0);
  std::uint64_t visited = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!(visited & bit(v)) && (pick == n || weight[v] > weight[pick])) pick = v;
    // The reverse visit order is a perfect elimination ordering iff G is
    // chordal, i.e. every vertex's previously visited neighbours form a clique.
    std::uint64_t earlier = g.neighbor_mask(pick) & visited;
    for (std::uint64_t m = earlier; m; m &= m - 1) {
      std::size_t w = static_cast<std::size_t>(std::countr_zero(m));
      if ((earlier & ~bit(w) & ~g.neighbor_mask(w)) != 0) return false;
    }
    visited |= bit(pick);
    for (std::uint64_t m = g.neighbor_mask(pick) & ~visited; m; m &= m - 1)
      ++weight[static_cast<std::size_t>(std::countr_zero(m))];
  }
  return true;
}

std::size_t matching_number(const Graph& g) {
  std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0} : bit(g.order()) - 1;
  return matching_in(g, all);
}

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

Graph labeled_graph(std::size_t n, std::uint64_t index) {
  if (pair_count(n) < 64 && index >> pair_count(n))
    throw PreconditionError("labeled graph index out of range");
  Graph g(n);
  std::size_t t = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++t)
      if (t < 64 && (index >> t) & 1) g.add_edge(i, j);
  return g;
}

LabeledGraphRange::LabeledGraphRange(std::size_t n)
    : LabeledGraphRange(n, 0, 0) {
  if (pair_count(n) >= 63) throw PreconditionError("enumeration limited to n <= 11");
  end_ = std::uint64_t{1} << pair_count(n);
}

LabeledGraphRange::LabeledGraphRange(std::size_t n, std::uint64_t begin,
                                     std::uint64_t end)
    : n_(n), begin_(begin), end_(end) {
  if (n == 0) throw PreconditionError("a graph needs at least one vertex");
  if (end < begin) throw PreconditionError("empty enumeration shard bounds reversed");
}

Graph parse_graph6(std::string_view line) {
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) pos = header.size();
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);

  auto byte_at = [&](std::size_t p) -> std::uint32_t {
    if (p >= line.size()) throw ParseError("graph6: unexpected end of input", p);
    auto ch = static_cast<unsigned char>(line[p]);
    if (ch < 63 || ch > 126) throw ParseError("graph6: byte outside 63..126", p);
    return ch - 63u;
  };

  std::uint64_t n = 0;
  std::uint32_t first = byte_at(pos);
  if (first < 63) {
    n = first;
    pos += 1;
  } else if (byte_at(pos + 1) < 63) {
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | byte_at(pos + k);
    pos += 4;
  } else {
    for (std::size_t k = 2; k <= 7; ++k) n = (n << 6) | byte_at(pos + k);
    pos += 8;
  }
  if (n == 0) throw ParseError("graph6: zero-vertex graphs are not supported", pos - 1);
  if (n > kMaxVertices) throw ParseError("graph6: more than 64 vertices", pos - 1);

  const std::size_t bits = pair_count(n);
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() < pos + bytes) throw ParseError("graph6: truncated edge data", line.size());
  if (line.size() > pos + bytes) throw ParseError("graph6: trailing bytes", pos + bytes);

  Graph g(n);
  std::size_t t = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++t) {
      std::uint32_t chunk = byte_at(pos + t / 6);
      if ((chunk >> (5 - t % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero for a canonical encoding.
  if (bits % 6) {
    std::uint32_t last = byte_at(pos + bytes - 1);
    if (last & ((1u << (6 - bits % 6)) - 1))
      throw ParseError("graph6: nonzero padding bits", pos + bytes - 1);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  std::string out;
  const std::size_t n = g.order();
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int k = 2; k >= 0; --k) out.push_back(static_cast<char>(((n >> (6 * k)) & 63) + 63));
  }
  std::uint32_t chunk = 0;
  std::size_t filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

}  // namespace bpow
