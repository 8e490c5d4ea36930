#include "bpow/polymatroid.hpp"

#include <algorithm>

#include "bpow/bounded_powers.hpp"

namespace bpow {

bool is_equigenerated(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  return std::all_of(gens.begin(), gens.end(), [&](const Monomial& g) {
    return g.degree() == gens.front().degree();
  });
}

namespace {

std::optional<std::size_t> witness_unchecked(const MonomialIdeal& ideal, const Monomial& u,
                                             const Monomial& v, std::size_t i) {
  std::vector<Exponent> moved(u.exponents().begin(), u.exponents().end());
  --moved[i];
  for (std::size_t j = 0; j < u.ambient(); ++j) {
    if (u[j] >= v[j]) continue;
    ++moved[j];
    bool hit = ideal.index_of(Monomial(moved)) < ideal.size();
    --moved[j];
    if (hit) return j;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> exchange_witness(const MonomialIdeal& ideal, std::size_t u_idx,
                                            std::size_t v_idx, std::size_t i) {
  if (u_idx >= ideal.size() || v_idx >= ideal.size())
    throw PreconditionError("exchange_witness: generator index out of range");
  const Monomial& u = ideal[u_idx];
  const Monomial& v = ideal[v_idx];
  if (i >= ideal.ambient() || u[i] <= v[i])
    throw PreconditionError("exchange_witness: needs deg_{x_i}(u) > deg_{x_i}(v)");
  return witness_unchecked(ideal, u, v, i);
}

bool is_polymatroidal(const MonomialIdeal& ideal) {
  if (!is_equigenerated(ideal)) return false;
  for (const auto& u : ideal.generators())
    for (const auto& v : ideal.generators())
      for (std::size_t i = 0; i < ideal.ambient(); ++i)
        if (u[i] > v[i] && !witness_unchecked(ideal, u, v, i)) return false;
  return true;
}

bool is_matroidal(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  return std::all_of(gens.begin(), gens.end(), [](const Monomial& g) { return g.is_squarefree(); }) &&
         is_polymatroidal(ideal);
}

Outcome verify_essen(const Graph& g, const BoundVector& c) {
  auto levels = bounded_power_levels(edge_ideal(g), c);
  if (levels.empty()) return Outcome::skipped;
  return outcome_of(is_polymatroidal(levels.back()));
}

}  // namespace bpow
