#pragma once

// Graded Betti numbers of monomial ideals through the simplicial homology of
// upper Koszul complexes, and the regularity read off from them.

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "bpow/monomial.hpp"

namespace bpow {

/// Coefficient field: characteristic 0 (the rationals) or a prime p.
class Field {
 public:
  constexpr Field() = default;
  explicit Field(std::uint32_t characteristic);

  std::uint32_t characteristic() const noexcept { return char_; }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint32_t char_ = 0;
};

/// A finite simplicial complex on at most 64 labeled vertices. Faces are
/// bitmasks over positions in `vertices()`; the face list is closed under
/// taking subsets. The void complex (no faces at all) differs from the
/// irrelevant complex {{}}.
class SimplicialComplex {
 public:
  /// Downward closure of `faces`.
  static SimplicialComplex from_faces(std::vector<std::size_t> vertices,
                                      const std::vector<std::uint64_t>& faces);
  static SimplicialComplex void_complex(std::vector<std::size_t> vertices);

  const std::vector<std::size_t>& vertices() const noexcept { return vertices_; }
  const std::vector<std::uint64_t>& faces() const noexcept { return faces_; }
  bool is_void() const noexcept { return faces_.empty(); }
  bool contains(std::uint64_t face) const;
  /// Highest face dimension; -1 for {{}}, -2 for the void complex.
  int dimension() const;

 private:
  SimplicialComplex(std::vector<std::size_t> vertices, std::vector<std::uint64_t> faces)
      : vertices_(std::move(vertices)), faces_(std::move(faces)) {}

  std::vector<std::size_t> vertices_;
  std::vector<std::uint64_t> faces_;  // sorted
};

/// dim_K of reduced homology in degree i (i >= -1).
std::size_t homology_rank(const SimplicialComplex& complex, int i, Field field = Field{});

/// Graded Betti numbers beta_{i,j} of an ideal (not of its quotient ring).
class BettiTable {
 public:
  explicit BettiTable(Field field = Field{}) : field_(field) {}

  Field field() const noexcept { return field_; }
  std::uint64_t get(int i, int j) const;
  void add(int i, int j, std::uint64_t beta);
  /// Nonzero entries keyed by (i, j), in increasing order.
  const std::map<std::pair<int, int>, std::uint64_t>& entries() const noexcept { return entries_; }
  /// max{ j - i : beta_{i,j} != 0 }; throws PreconditionError if empty.
  int regularity() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  Field field_;
  std::map<std::pair<int, int>, std::uint64_t> entries_;
};

/// Variable x_i with multiplicity a_i maps to x_{i,1}, ..., x_{i,a_i}, laid out
/// consecutively: x_{i,k} is target variable offset(i) + k - 1.
class PolarizationMap {
 public:
  explicit PolarizationMap(std::vector<Exponent> multiplicities);

  std::size_t source_ambient() const noexcept { return mult_.size(); }
  std::size_t target_ambient() const noexcept { return offsets_.back(); }
  Exponent multiplicity(std::size_t i) const { return mult_.at(i); }
  std::size_t offset(std::size_t i) const { return offsets_.at(i); }
  /// Target index of x_{i,k}, k in 1..a_i.
  std::size_t target(std::size_t i, Exponent k) const;

  Monomial apply(const Monomial& u) const;

 private:
  std::vector<Exponent> mult_;
  std::vector<std::size_t> offsets_;
};

struct Polarization {
  MonomialIdeal ideal;
  PolarizationMap map;
};

/// Squarefree polarization; throws PreconditionError on the zero ideal.
Polarization polarize(const MonomialIdeal& ideal);

/// All lcms of nonempty subsets of G(I), sorted.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal);

/// K^m(I) = { sigma in supp(m) : m / x_sigma in I }, on vertices supp(m).
/// Requires m in I.
SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& m);

/// beta_{i,m}(I) summed over the lcm lattice by total degree. Requires I != 0.
BettiTable betti_table(const MonomialIdeal& ideal, Field field = Field{});

/// Castelnuovo-Mumford regularity of a nonzero ideal.
int regularity(const MonomialIdeal& ideal, Field field = Field{});

/// reg(I) equals the common generator degree. Requires a nonzero
/// equigenerated ideal.
bool has_linear_resolution(const MonomialIdeal& ideal, Field field = Field{});

}  // namespace bpow
