#pragma once

#include <cstddef>
#include <vector>

#include "bpow/graph.hpp"
#include "bpow/monomial.hpp"

namespace bpow {

/// (I^s)_c, the s-th c-bounded power. Enumerates multisets of s generators,
/// abandoning any partial product that already exceeds c.
MonomialIdeal bounded_power(const MonomialIdeal& ideal, unsigned s,
                            const BoundVector& c);

/// I^[s] = (I^s)_(1,...,1).
MonomialIdeal squarefree_power(const MonomialIdeal& ideal, unsigned s);

/// The nonzero bounded powers (I^1)_c, ..., (I^delta)_c in order, built by
/// the recurrence (I^{s+1})_c = ((I^s)_c * I)_c. Empty when I_c = 0.
/// Throws PreconditionError if I_c is the unit ideal (delta is unbounded).
std::vector<MonomialIdeal> bounded_power_levels(const MonomialIdeal& ideal,
                                                const BoundVector& c);

/// delta_c(I): the largest k with (I^k)_c != 0, or 0 if I_c = 0.
unsigned delta(const MonomialIdeal& ideal, const BoundVector& c);

/// Maximum total multiplicity of an edge multiset covering each vertex i at
/// most c_i times, by exhaustive branch and bound.
unsigned delta_edge_bmatching(const Graph& g, const BoundVector& c);

/// All ways of writing `u` as a product of `s` edges of G, each an edge
/// multiset in non-decreasing edge order; the lexicographically smallest
/// comes first. At most `limit` factorizations are produced.
std::vector<std::vector<Edge>> edge_factorizations(const Graph& g, const Monomial& u,
                                                   unsigned s,
                                                   std::size_t limit = SIZE_MAX);

}  // namespace bpow
