#include "bpow/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace bpow {

Monomial::Monomial(std::vector<Exponent> exponents)
    : exps_(std::move(exponents)) {}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : exps_(exponents) {}

Monomial Monomial::one(std::size_t n) {
  return Monomial(std::vector<Exponent>(n, 0));
}

Monomial Monomial::variable(std::size_t n, std::size_t index) {
  if (index >= n) throw std::out_of_range("variable index out of range");
  std::vector<Exponent> e(n, 0);
  e[index] = 1;
  return Monomial(std::move(e));
}

std::uint64_t Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](Exponent e) { return e <= 1; });
}

std::uint64_t Monomial::support_mask() const {
  if (exps_.size() > 64) throw std::length_error("support mask needs n <= 64");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) mask |= std::uint64_t{1} << i;
  return mask;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    out += "x" + std::to_string(i + 1);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::uint64_t BoundVector::total() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
}

bool BoundVector::all_positive() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Exponent e) { return e > 0; });
}

std::string BoundVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

bool bound_leq(const BoundVector& lhs, const BoundVector& rhs) {
  check_ambient(lhs.ambient(), rhs.ambient());
  for (std::size_t i = 0; i < lhs.ambient(); ++i)
    if (lhs[i] > rhs[i]) return false;
  return true;
}

bool divides(const Monomial& u, const Monomial& v) {
  check_ambient(u.ambient(), v.ambient());
  for (std::size_t i = 0; i < u.ambient(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

Monomial operator*(const Monomial& u, const Monomial& v) {
  check_ambient(u.ambient(), v.ambient());
  std::vector<Exponent> e(u.ambient());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (u[i] > std::numeric_limits<Exponent>::max() - v[i])
      throw std::overflow_error("exponent overflow in monomial product");
    e[i] = u[i] + v[i];
  }
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  check_ambient(u.ambient(), v.ambient());
  std::vector<Exponent> e(u.ambient());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(u[i], v[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  check_ambient(u.ambient(), v.ambient());
  std::vector<Exponent> e(u.ambient());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(u[i], v[i]);
  return Monomial(std::move(e));
}

Monomial quotient(const Monomial& u, const Monomial& v) {
  if (!divides(v, u))
    throw PreconditionError("quotient: " + v.to_string() + " does not divide " +
                            u.to_string());
  std::vector<Exponent> e(u.ambient());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = u[i] - v[i];
  return Monomial(std::move(e));
}

Monomial colon(const Monomial& u, const Monomial& v) {
  check_ambient(u.ambient(), v.ambient());
  std::vector<Exponent> e(u.ambient());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = u[i] > v[i] ? u[i] - v[i] : 0;
  return Monomial(std::move(e));
}

bool is_bounded(const Monomial& u, const BoundVector& c) {
  check_ambient(u.ambient(), c.ambient());
  for (std::size_t i = 0; i < u.ambient(); ++i)
    if (u[i] > c[i]) return false;
  return true;
}

MonomialIdeal MonomialIdeal::minimalize(std::size_t n, std::vector<Monomial> ms) {
  for (const auto& m : ms) check_ambient(n, m.ambient());
  // A divisor of m has degree <= deg m, so a degree-sorted sweep only has to
  // test candidates against the survivors kept so far.
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  MonomialIdeal out(n);
  for (auto& m : ms) {
    bool redundant = std::any_of(out.gens_.begin(), out.gens_.end(),
                                 [&](const Monomial& g) { return divides(g, m); });
    if (!redundant) out.gens_.push_back(std::move(m));
  }
  std::sort(out.gens_.begin(), out.gens_.end());
  return out;
}

MonomialIdeal MonomialIdeal::unit(std::size_t n) {
  return minimalize(n, {Monomial::one(n)});
}

bool MonomialIdeal::contains(const Monomial& u) const {
  check_ambient(n_, u.ambient());
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return divides(g, u); });
}

std::size_t MonomialIdeal::index_of(const Monomial& u) const {
  auto it = std::lower_bound(gens_.begin(), gens_.end(), u);
  if (it != gens_.end() && *it == u) return static_cast<std::size_t>(it - gens_.begin());
  return gens_.size();
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

MonomialIdeal product(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  check_ambient(lhs.ambient(), rhs.ambient());
  std::vector<Monomial> ms;
  ms.reserve(lhs.size() * rhs.size());
  for (const auto& a : lhs.generators())
    for (const auto& b : rhs.generators()) ms.push_back(a * b);
  return MonomialIdeal::minimalize(lhs.ambient(), std::move(ms));
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned s) {
  if (s == 0) throw PreconditionError("ideal power requires s >= 1");
  MonomialIdeal out = ideal;
  for (unsigned k = 1; k < s; ++k) out = product(out, ideal);
  return out;
}

MonomialIdeal restrict_to(const MonomialIdeal& ideal, const BoundVector& c) {
  check_ambient(ideal.ambient(), c.ambient());
  std::vector<Monomial> kept;
  for (const auto& g : ideal.generators())
    if (is_bounded(g, c)) kept.push_back(g);
  return MonomialIdeal::minimalize(ideal.ambient(), std::move(kept));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
  check_ambient(ideal.ambient(), u.ambient());
  std::vector<Monomial> ms;
  ms.reserve(ideal.size());
  for (const auto& g : ideal.generators()) ms.push_back(colon(g, u));
  return MonomialIdeal::minimalize(ideal.ambient(), std::move(ms));
}

MonomialIdeal operator+(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  check_ambient(lhs.ambient(), rhs.ambient());
  std::vector<Monomial> ms = lhs.generators();
  ms.insert(ms.end(), rhs.generators().begin(), rhs.generators().end());
  return MonomialIdeal::minimalize(lhs.ambient(), std::move(ms));
}

}  // namespace bpow
