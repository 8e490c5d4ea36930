#include "bpow/homology.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "bpow/polymatroid.hpp"
#include "linalg.hpp"

namespace bpow {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> faces_of_dim(const SimplicialComplex& c, int d) {
  std::vector<std::uint64_t> out;
  for (auto f : c.faces())
    if (std::popcount(f) == d + 1) out.push_back(f);
  return out;
}

// Rank of the boundary map from d-faces to (d-1)-faces.
std::size_t boundary_rank(const SimplicialComplex& c, int d, Field field) {
  if (d < 0) return 0;
  const auto upper = faces_of_dim(c, d);
  const auto lower = faces_of_dim(c, d - 1);
  if (upper.empty() || lower.empty()) return 0;
  linalg::IntMatrix m(upper.size(), std::vector<std::int64_t>(lower.size(), 0));
  for (std::size_t r = 0; r < upper.size(); ++r) {
    int sign = 1;
    for (std::uint64_t rest = upper[r]; rest; rest &= rest - 1) {
      const std::uint64_t v = rest & (~rest + 1);
      auto it = std::lower_bound(lower.begin(), lower.end(), upper[r] & ~v);
      m[r][static_cast<std::size_t>(it - lower.begin())] = sign;
      sign = -sign;
    }
  }
  return field.characteristic() == 0 ? linalg::rank_rational(m)
                                     : linalg::rank_mod_p(m, field.characteristic());
}

}  // namespace

Field::Field(std::uint32_t characteristic) : char_(characteristic) {
  if (characteristic != 0 && !is_prime(characteristic))
    throw PreconditionError("field characteristic must be 0 or a prime");
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::size_t> vertices,
                                                const std::vector<std::uint64_t>& faces) {
  if (vertices.size() > 64) throw PreconditionError("complexes are limited to 64 vertices");
  const std::uint64_t all = vertices.size() == 64 ? ~std::uint64_t{0}
                                                  : (std::uint64_t{1} << vertices.size()) - 1;
  std::set<std::uint64_t> closed;
  for (auto f : faces) {
    if (f & ~all) throw PreconditionError("face uses a vertex outside the complex");
    if (closed.count(f)) continue;
    // Every subset of f, including f itself and the empty face.
    for (std::uint64_t sub = f;; sub = (sub - 1) & f) {
      closed.insert(sub);
      if (sub == 0) break;
    }
  }
  return SimplicialComplex(std::move(vertices), {closed.begin(), closed.end()});
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<std::size_t> vertices) {
  return SimplicialComplex(std::move(vertices), {});
}

bool SimplicialComplex::contains(std::uint64_t face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face);
}

int SimplicialComplex::dimension() const {
  int d = -2;
  for (auto f : faces_) d = std::max(d, std::popcount(f) - 1);
  return d;
}

std::size_t homology_rank(const SimplicialComplex& complex, int i, Field field) {
  if (complex.is_void() || i < -1) return 0;
  const std::size_t chains = faces_of_dim(complex, i).size();
  const std::size_t out_rank = boundary_rank(complex, i, field);
  const std::size_t in_rank = boundary_rank(complex, i + 1, field);
  return chains - out_rank - in_rank;
}

std::uint64_t BettiTable::get(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::uint64_t beta) {
  if (beta) entries_[{i, j}] += beta;
}

int BettiTable::regularity() const {
  if (entries_.empty()) throw PreconditionError("regularity of an empty Betti table");
  int reg = entries_.begin()->first.second - entries_.begin()->first.first;
  for (const auto& [key, beta] : entries_) reg = std::max(reg, key.second - key.first);
  return reg;
}

PolarizationMap::PolarizationMap(std::vector<Exponent> multiplicities)
    : mult_(std::move(multiplicities)), offsets_(mult_.size() + 1, 0) {
  for (std::size_t i = 0; i < mult_.size(); ++i) offsets_[i + 1] = offsets_[i] + mult_[i];
}

std::size_t PolarizationMap::target(std::size_t i, Exponent k) const {
  if (k == 0 || k > mult_.at(i)) throw std::out_of_range("polarization copy out of range");
  return offsets_[i] + k - 1;
}

Monomial PolarizationMap::apply(const Monomial& u) const {
  check_ambient(source_ambient(), u.ambient());
  std::vector<Exponent> e(target_ambient(), 0);
  for (std::size_t i = 0; i < u.ambient(); ++i) {
    if (u[i] > mult_[i]) throw PreconditionError("exponent exceeds polarization multiplicity");
    for (Exponent k = 1; k <= u[i]; ++k) e[target(i, k)] = 1;
  }
  return Monomial(std::move(e));
}

Polarization polarize(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw PreconditionError("polarization of the zero ideal");
  std::vector<Exponent> mult(ideal.ambient(), 0);
  for (const auto& g : ideal.generators())
    for (std::size_t i = 0; i < g.ambient(); ++i) mult[i] = std::max(mult[i], g[i]);
  PolarizationMap map(std::move(mult));
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(map.apply(g));
  auto pol = MonomialIdeal::minimalize(map.target_ambient(), std::move(gens));
  return {std::move(pol), std::move(map)};
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal) {
  std::set<Monomial> lattice(ideal.generators().begin(), ideal.generators().end());
  std::vector<Monomial> frontier(lattice.begin(), lattice.end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier)
      for (const auto& g : ideal.generators()) {
        Monomial l = lcm(m, g);
        if (lattice.insert(l).second) next.push_back(std::move(l));
      }
    frontier = std::move(next);
  }
  return {lattice.begin(), lattice.end()};
}

SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& m) {
  if (!ideal.contains(m)) throw PreconditionError(m.to_string() + " is not in the ideal");
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < m.ambient(); ++i)
    if (m[i] > 0) support.push_back(i);
  if (support.size() > 64) throw PreconditionError("support too large for a complex");
  std::vector<std::uint64_t> faces;
  std::vector<Exponent> e(m.exponents().begin(), m.exponents().end());
  const std::uint64_t all = support.size() == 64 ? ~std::uint64_t{0}
                                                 : (std::uint64_t{1} << support.size()) - 1;
  for (std::uint64_t sigma = 0; sigma <= all; ++sigma) {
    for (std::size_t k = 0; k < support.size(); ++k)
      if (sigma >> k & 1) --e[support[k]];
    if (ideal.contains(Monomial(e))) faces.push_back(sigma);
    for (std::size_t k = 0; k < support.size(); ++k)
      if (sigma >> k & 1) ++e[support[k]];
    if (sigma == all) break;
  }
  return SimplicialComplex::from_faces(std::move(support), faces);
}

BettiTable betti_table(const MonomialIdeal& ideal, Field field) {
  if (ideal.is_zero()) throw PreconditionError("Betti table of the zero ideal");
  BettiTable table(field);
  for (const auto& m : lcm_lattice(ideal)) {
    const SimplicialComplex k = upper_koszul(ideal, m);
    const int top = static_cast<int>(k.vertices().size());
    for (int i = 0; i <= top; ++i)
      table.add(i, static_cast<int>(m.degree()), homology_rank(k, i - 1, field));
  }
  return table;
}

int regularity(const MonomialIdeal& ideal, Field field) {
  return betti_table(ideal, field).regularity();
}

bool has_linear_resolution(const MonomialIdeal& ideal, Field field) {
  if (ideal.is_zero() || !is_equigenerated(ideal))
    throw PreconditionError("linear resolution test needs a nonzero equigenerated ideal");
  return regularity(ideal, field) == static_cast<int>(ideal[0].degree());
}

}  // namespace bpow
