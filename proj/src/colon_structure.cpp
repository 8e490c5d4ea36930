#include "bpow/colon_structure.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <tuple>

#include "bpow/bounded_powers.hpp"
#include "bpow/linear_quotients.hpp"

namespace bpow {

namespace {

struct SearchNode {
  std::size_t vertex;
  bool after_product;  // true at p_{2k} (k >= 1), false at p_{2k+1}
  std::vector<unsigned> remaining;
  std::ptrdiff_t parent;
  std::ptrdiff_t via;  // distinct product edge used to get here, -1 for a G edge
};

void require_admissible_level(unsigned s, unsigned d) {
  if (s == 0 || s + 1 > d)
    throw PreconditionError("need 1 <= s <= delta - 1 (s = " + std::to_string(s) +
                            ", delta = " + std::to_string(d) + ")");
}

}  // namespace

bool is_even_connection(const Graph& g, std::span<const Edge> product, std::size_t a,
                        std::size_t b, const EvenConnection& walk) {
  const std::size_t r = walk.assignment.size();
  const auto& p = walk.path;
  if (r == 0 || p.size() != 2 * r + 2) return false;
  if (p.front() != a || p.back() != b) return false;
  for (std::size_t k = 0; k + 1 < p.size(); ++k)
    if (p[k] >= g.order() || p[k + 1] >= g.order() || !g.adjacent(p[k], p[k + 1])) return false;
  std::vector<bool> used(product.size(), false);
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t i = walk.assignment[k];
    if (i >= product.size() || used[i]) return false;
    used[i] = true;
    if (product[i] != Edge(p[2 * k + 1], p[2 * k + 2])) return false;
  }
  return true;
}

std::optional<EvenConnection> find_even_connection(const Graph& g,
                                                   std::span<const Edge> product,
                                                   std::size_t a, std::size_t b) {
  if (a >= g.order() || b >= g.order()) throw PreconditionError("vertex out of range");
  std::vector<Edge> distinct(product.begin(), product.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<unsigned> full(distinct.size(), 0);
  for (const auto& e : product) {
    if (!g.adjacent(e.first, e.second))
      throw PreconditionError("edge product contains a non-edge of G");
    ++full[static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), e) -
                                    distinct.begin())];
  }

  std::vector<SearchNode> nodes;
  std::map<std::tuple<std::size_t, bool, std::vector<unsigned>>, std::size_t> seen;
  std::deque<std::size_t> queue;
  auto push = [&](SearchNode node) {
    auto key = std::make_tuple(node.vertex, node.after_product, node.remaining);
    if (seen.count(key)) return;
    seen.emplace(std::move(key), nodes.size());
    queue.push_back(nodes.size());
    nodes.push_back(std::move(node));
  };
  for (auto w : g.neighbors(a)) push({w, false, full, -1, -1});

  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    const std::size_t v = nodes[at].vertex;
    if (!nodes[at].after_product) {
      for (std::size_t d = 0; d < distinct.size(); ++d) {
        if (!nodes[at].remaining[d] || !distinct[d].contains(v)) continue;
        auto rem = nodes[at].remaining;
        --rem[d];
        push({distinct[d].other(v), true, std::move(rem), static_cast<std::ptrdiff_t>(at),
              static_cast<std::ptrdiff_t>(d)});
      }
      continue;
    }
    for (auto w : g.neighbors(v)) {
      if (w == b) {
        // Rebuild p_0 .. p_{2r+1} and hand out distinct product copies.
        std::vector<std::size_t> rev{b};
        std::vector<std::ptrdiff_t> vias;
        for (std::ptrdiff_t k = static_cast<std::ptrdiff_t>(at); k >= 0; k = nodes[k].parent) {
          rev.push_back(nodes[k].vertex);
          if (nodes[k].via >= 0) vias.push_back(nodes[k].via);
        }
        rev.push_back(a);
        EvenConnection walk;
        walk.path.assign(rev.rbegin(), rev.rend());
        std::vector<bool> used(product.size(), false);
        for (auto it = vias.rbegin(); it != vias.rend(); ++it) {
          const Edge& e = distinct[static_cast<std::size_t>(*it)];
          for (std::size_t i = 0; i < product.size(); ++i) {
            if (!used[i] && product[i] == e) {
              used[i] = true;
              walk.assignment.push_back(i);
              break;
            }
          }
        }
        return walk;
      }
      push({w, false, nodes[at].remaining, static_cast<std::ptrdiff_t>(at), -1});
    }
  }
  return std::nullopt;
}

namespace detail {

MonomialIdeal colon_quadrics_unchecked(const Graph& g, const BoundVector& c, const Monomial& u,
                                       std::span<const Edge> factorization) {
  const std::size_t n = g.order();
  std::vector<Monomial> quadrics;
  std::vector<Exponent> e(u.exponents().begin(), u.exponents().end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      ++e[i];
      ++e[j];
      const bool bounded = e[i] <= c[i] && e[j] <= c[j];
      --e[i];
      --e[j];
      if (!bounded) continue;
      if ((i != j && g.adjacent(i, j)) || find_even_connection(g, factorization, i, j)) {
        std::vector<Exponent> q(n, 0);
        ++q[i];
        ++q[j];
        quadrics.emplace_back(std::move(q));
      }
    }
  }
  return MonomialIdeal::minimalize(n, std::move(quadrics));
}

}  // namespace detail

MonomialIdeal colon_quadrics(const Graph& g, unsigned s, const BoundVector& c,
                             const Monomial& u, std::span<const Edge> factorization) {
  check_ambient(g.order(), c.ambient());
  check_ambient(g.order(), u.ambient());
  auto levels = bounded_power_levels(edge_ideal(g), c);
  require_admissible_level(s, static_cast<unsigned>(levels.size()));
  if (levels[s - 1].index_of(u) == levels[s - 1].size())
    throw PreconditionError(u.to_string() + " is not a minimal generator of the bounded power");
  if (factorization.size() != s) throw PreconditionError("factorization must have s edges");
  Monomial prod = Monomial::one(g.order());
  for (const auto& e : factorization) {
    if (!g.adjacent(e.first, e.second)) throw PreconditionError("factorization uses a non-edge");
    prod = prod * edge_monomial(g.order(), e);
  }
  if (prod != u) throw PreconditionError("factorization does not multiply to u");
  return detail::colon_quadrics_unchecked(g, c, u, factorization);
}

MonomialIdeal colon_quadrics(const Graph& g, unsigned s, const BoundVector& c,
                             const Monomial& u) {
  auto f = edge_factorizations(g, u, s, 1);
  if (f.empty()) throw PreconditionError(u.to_string() + " is not a product of s edges");
  return colon_quadrics(g, s, c, u, f.front());
}

Outcome verify_deg2(const Graph& g, unsigned s, const BoundVector& c) {
  auto levels = bounded_power_levels(edge_ideal(g), c);
  require_admissible_level(s, static_cast<unsigned>(levels.size()));
  for (const auto& u : levels[s - 1].generators()) {
    const MonomialIdeal q = colon(levels[s], u);
    for (const auto& m : q.generators())
      if (m.degree() != 2) return Outcome::fail;
  }
  return Outcome::pass;
}

namespace {

struct RfirstTable {
  std::size_t m;
  std::vector<int> var;
  std::vector<std::uint64_t> supp;
  std::vector<bool> in_next_colon;

  RfirstTable(const MonomialIdeal& level, const MonomialIdeal& next)
      : m(level.size()), var(m * m, -1), supp(m * m, 0), in_next_colon(m * m, false) {
    for (std::size_t g = 0; g < m; ++g) {
      MonomialIdeal q = colon(next, level[g]);
      for (std::size_t h = 0; h < m; ++h) {
        if (h == g) continue;
        Monomial hg = colon(level[h], level[g]);
        supp[h * m + g] = hg.support_mask();
        if (hg.degree() == 1) var[h * m + g] = std::countr_zero(supp[h * m + g]);
        in_next_colon[h * m + g] = q.contains(hg);
      }
    }
  }

  bool admissible(std::uint32_t placed, std::size_t g) const {
    std::uint64_t linear = 0;
    for (std::uint32_t p = placed; p; p &= p - 1) {
      auto h = static_cast<std::size_t>(std::countr_zero(p));
      if (var[h * m + g] >= 0) linear |= std::uint64_t{1} << var[h * m + g];
    }
    for (std::uint32_t p = placed; p; p &= p - 1) {
      auto h = static_cast<std::size_t>(std::countr_zero(p));
      if (!in_next_colon[h * m + g] && !(supp[h * m + g] & linear)) return false;
    }
    return true;
  }
};

}  // namespace

bool is_rfirst_labeling(const MonomialIdeal& level, const MonomialIdeal& next,
                        std::span<const std::size_t> order) {
  check_ambient(level.ambient(), next.ambient());
  const std::size_t m = level.size();
  std::vector<bool> seen(m, false);
  if (order.size() != m) throw PreconditionError("labeling must list every generator once");
  for (auto k : order) {
    if (k >= m || seen[k]) throw PreconditionError("labeling must list every generator once");
    seen[k] = true;
  }
  for (std::size_t i = 1; i < m; ++i) {
    const Monomial& ui = level[order[i]];
    MonomialIdeal q = colon(next, ui);
    for (std::size_t j = 0; j < i; ++j) {
      Monomial uj_ui = colon(level[order[j]], ui);
      if (q.contains(uj_ui)) continue;
      bool covered = false;
      for (std::size_t r = 0; r < i && !covered; ++r) {
        Monomial ur_ui = colon(level[order[r]], ui);
        covered = ur_ui.degree() == 1 && divides(ur_ui, uj_ui);
      }
      if (!covered) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> find_rfirst_labeling(const MonomialIdeal& level,
                                                             const MonomialIdeal& next,
                                                             std::size_t cap) {
  check_ambient(level.ambient(), next.ambient());
  if (level.size() > std::min(cap, kMaxSearchCap))
    throw CapExceeded(level.size(), std::min(cap, kMaxSearchCap));
  RfirstTable table(level, next);
  return search_set_ordering(
      level.size(), [&](std::uint32_t placed, std::size_t g) { return table.admissible(placed, g); },
      cap);
}

Outcome verify_rfirst(const Graph& g, unsigned s, const BoundVector& c, std::size_t cap) {
  auto levels = bounded_power_levels(edge_ideal(g), c);
  require_admissible_level(s, static_cast<unsigned>(levels.size()));
  if (levels[s - 1].size() > std::min(cap, kMaxSearchCap)) return Outcome::skipped;
  auto labeling = find_rfirst_labeling(levels[s - 1], levels[s], cap);
  return outcome_of(labeling && is_rfirst_labeling(levels[s - 1], levels[s], *labeling));
}

}  // namespace bpow
