#pragma once

// Exact arithmetic on monomials of K[x_1, ..., x_n] and on monomial ideals
// represented by their minimal generating sets.
//
// Variables are indexed 0..n-1 in the API; serialized forms and printed
// monomials use the 1-based names x1..xn.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "bpow/errors.hpp"

namespace bpow {

using Exponent = std::uint32_t;

/// A monomial, stored as its exponent vector in N^n.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents);

  static Monomial one(std::size_t n);
  static Monomial variable(std::size_t n, std::size_t index);

  std::size_t ambient() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;
  bool is_squarefree() const noexcept;
  /// Bitmask of variables with positive exponent (n <= 64).
  std::uint64_t support_mask() const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial&,
                                          const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// The vector c of per-variable exponent bounds.
class BoundVector {
 public:
  BoundVector() = default;
  explicit BoundVector(std::vector<Exponent> entries)
      : entries_(std::move(entries)) {}
  BoundVector(std::initializer_list<Exponent> entries) : entries_(entries) {}

  static BoundVector ones(std::size_t n) { return constant(n, 1); }
  static BoundVector constant(std::size_t n, Exponent k) {
    return BoundVector(std::vector<Exponent>(n, k));
  }

  std::size_t ambient() const noexcept { return entries_.size(); }
  Exponent operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Exponent> entries() const noexcept { return entries_; }

  /// |c|, the sum of the entries.
  std::uint64_t total() const noexcept;
  bool all_positive() const noexcept;
  std::string to_string() const;

  friend bool operator==(const BoundVector&, const BoundVector&) = default;
  friend std::strong_ordering operator<=>(const BoundVector&,
                                          const BoundVector&) = default;

 private:
  std::vector<Exponent> entries_;
};

/// c' <=# c, componentwise.
bool bound_leq(const BoundVector& lhs, const BoundVector& rhs);

bool divides(const Monomial& u, const Monomial& v);
Monomial operator*(const Monomial& u, const Monomial& v);
Monomial lcm(const Monomial& u, const Monomial& v);
Monomial gcd(const Monomial& u, const Monomial& v);
/// u / v; requires v | u.
Monomial quotient(const Monomial& u, const Monomial& v);
/// u : v = u / gcd(u, v).
Monomial colon(const Monomial& u, const Monomial& v);
bool is_bounded(const Monomial& u, const BoundVector& c);

/// A monomial ideal, held as its canonical minimal generating set:
/// pairwise non-dividing generators sorted lexicographically by exponents.
/// The empty list is the zero ideal; {1} is the unit ideal.
class MonomialIdeal {
 public:
  /// The zero ideal in `n` variables.
  explicit MonomialIdeal(std::size_t n = 1) : n_(n) {}

  /// Reduces an arbitrary generating set to the canonical minimal one.
  static MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> ms);
  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(std::size_t n);

  std::size_t ambient() const noexcept { return n_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  const Monomial& operator[](std::size_t i) const { return gens_[i]; }

  bool contains(const Monomial& u) const;
  /// Index of `u` in G(I), or size() if `u` is not a minimal generator.
  std::size_t index_of(const Monomial& u) const;

  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_;
  std::vector<Monomial> gens_;
};

MonomialIdeal product(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
MonomialIdeal power(const MonomialIdeal& ideal, unsigned s);
/// I_c: the c-bounded minimal generators of I.
MonomialIdeal restrict_to(const MonomialIdeal& ideal, const BoundVector& c);
/// (I : u).
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);
/// Sum of ideals.
MonomialIdeal operator+(const MonomialIdeal& lhs, const MonomialIdeal& rhs);

}  // namespace bpow
