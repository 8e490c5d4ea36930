#include "bpow/bounded_powers.hpp"

#include <algorithm>
#include <functional>

namespace bpow {

namespace {

// Entrywise headroom c - u; negative entries never arise because callers
// only extend bounded partial products.
bool fits(const std::vector<Exponent>& room, const Monomial& g) {
  for (std::size_t i = 0; i < room.size(); ++i)
    if (g[i] > room[i]) return false;
  return true;
}

void take(std::vector<Exponent>& room, const Monomial& g) {
  for (std::size_t i = 0; i < room.size(); ++i) room[i] -= g[i];
}

void give(std::vector<Exponent>& room, const Monomial& g) {
  for (std::size_t i = 0; i < room.size(); ++i) room[i] += g[i];
}

Monomial used_part(const BoundVector& c, const std::vector<Exponent>& room) {
  std::vector<Exponent> e(c.ambient());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = c[i] - room[i];
  return Monomial(std::move(e));
}

}  // namespace

MonomialIdeal bounded_power(const MonomialIdeal& ideal, unsigned s,
                            const BoundVector& c) {
  check_ambient(ideal.ambient(), c.ambient());
  if (s == 0) throw PreconditionError("bounded power requires s >= 1");
  // Only c-bounded generators can appear in a c-bounded product.
  const MonomialIdeal base = restrict_to(ideal, c);
  const auto& gens = base.generators();
  std::vector<Exponent> room(c.entries().begin(), c.entries().end());
  std::vector<Monomial> products;

  std::function<void(std::size_t, unsigned)> extend = [&](std::size_t from,
                                                        unsigned left) {
    if (left == 0) {
      products.push_back(used_part(c, room));
      return;
    }
    for (std::size_t k = from; k < gens.size(); ++k) {
      if (!fits(room, gens[k])) continue;
      take(room, gens[k]);
      extend(k, left - 1);
      give(room, gens[k]);
    }
  };
  extend(0, s);
  return MonomialIdeal::minimalize(ideal.ambient(), std::move(products));
}

MonomialIdeal squarefree_power(const MonomialIdeal& ideal, unsigned s) {
  return bounded_power(ideal, s, BoundVector::ones(ideal.ambient()));
}

std::vector<MonomialIdeal> bounded_power_levels(const MonomialIdeal& ideal,
                                                const BoundVector& c) {
  check_ambient(ideal.ambient(), c.ambient());
  const MonomialIdeal base = restrict_to(ideal, c);
  std::vector<MonomialIdeal> levels;
  if (base.is_zero()) return levels;
  if (base.contains(Monomial::one(base.ambient())))
    throw PreconditionError("delta is unbounded for an ideal whose bounded part is the unit ideal");
  levels.push_back(base);
  while (true) {
    MonomialIdeal next = restrict_to(product(levels.back(), base), c);
    if (next.is_zero()) break;
    levels.push_back(std::move(next));
  }
  return levels;
}

unsigned delta(const MonomialIdeal& ideal, const BoundVector& c) {
  return static_cast<unsigned>(bounded_power_levels(ideal, c).size());
}

unsigned delta_edge_bmatching(const Graph& g, const BoundVector& c) {
  check_ambient(g.order(), c.ambient());
  const auto& edges = g.edges();
  std::vector<Exponent> room(c.entries().begin(), c.entries().end());
  unsigned best = 0;

  // Upper bound: every remaining unit of multiplicity consumes two units of
  // the capacity of vertices touched by the remaining edges.
  auto bound = [&](std::size_t from) {
    std::uint64_t touched = 0;
    for (std::size_t k = from; k < edges.size(); ++k)
      if (room[edges[k].first] && room[edges[k].second])
        touched |= (std::uint64_t{1} << edges[k].first) | (std::uint64_t{1} << edges[k].second);
    std::uint64_t cap = 0;
    for (std::size_t v = 0; v < room.size(); ++v)
      if (touched >> v & 1) cap += room[v];
    return cap / 2;
  };

  std::function<void(std::size_t, unsigned)> search = [&](std::size_t k, unsigned total) {
    best = std::max(best, total);
    if (k == edges.size() || total + bound(k) <= best) return;
    const Edge& e = edges[k];
    const Exponent most = std::min(room[e.first], room[e.second]);
    for (Exponent m = most + 1; m-- > 0;) {
      room[e.first] -= m;
      room[e.second] -= m;
      search(k + 1, total + m);
      room[e.first] += m;
      room[e.second] += m;
    }
  };
  search(0, 0);
  return best;
}

std::vector<std::vector<Edge>> edge_factorizations(const Graph& g, const Monomial& u,
                                                   unsigned s, std::size_t limit) {
  check_ambient(g.order(), u.ambient());
  std::vector<std::vector<Edge>> out;
  if (u.degree() != 2ull * s) return out;
  std::vector<Exponent> rest(u.exponents().begin(), u.exponents().end());
  std::vector<Edge> chosen;
  const auto& edges = g.edges();

  std::function<void(std::size_t)> search = [&](std::size_t from) {
    if (out.size() >= limit) return;
    if (chosen.size() == s) {
      out.push_back(chosen);
      return;
    }
    for (std::size_t k = from; k < edges.size(); ++k) {
      const Edge& e = edges[k];
      if (!rest[e.first] || !rest[e.second]) continue;
      --rest[e.first];
      --rest[e.second];
      chosen.push_back(e);
      search(k);
      chosen.pop_back();
      ++rest[e.first];
      ++rest[e.second];
    }
  };
  search(0);
  return out;
}

}  // namespace bpow
