#pragma once

// Colon ideals ((I(G)^{s+1})_c : u) of bounded powers of edge ideals and the
// even-connection walks that describe their quadratic generators.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bpow/graph.hpp"
#include "bpow/monomial.hpp"
#include "bpow/outcome.hpp"

namespace bpow {

/// An alternating walk p_0, ..., p_{2r+1} (r >= 1) whose pairs
/// {p_{2k+1}, p_{2k+2}} are distinct copies taken from a fixed edge product
/// e_1 ... e_s, and whose remaining consecutive pairs are edges of G.
struct EvenConnection {
  std::vector<std::size_t> path;
  /// assignment[k] = index into the edge product used by pair k.
  std::vector<std::size_t> assignment;

  std::size_t length() const noexcept { return assignment.size(); }  // r
};

/// Checks every defining condition of an even-connection between a and b.
bool is_even_connection(const Graph& g, std::span<const Edge> product, std::size_t a,
                        std::size_t b, const EvenConnection& walk);

/// A shortest even-connection between a and b (a == b allowed) with respect
/// to the edge product `product`, by breadth-first search over
/// (vertex, remaining multiplicities, parity) states.
std::optional<EvenConnection> find_even_connection(const Graph& g,
                                                   std::span<const Edge> product,
                                                   std::size_t a, std::size_t b);

/// Quadrics x_i x_j (i == j allowed) with u x_i x_j c-bounded and x_i, x_j
/// adjacent or even-connected with respect to `factorization` (which must
/// multiply to u). Requires 1 <= s <= delta_c(I(G)) - 1 and
/// u in G((I(G)^s)_c).
MonomialIdeal colon_quadrics(const Graph& g, unsigned s, const BoundVector& c,
                             const Monomial& u, std::span<const Edge> factorization);
/// Same, using the lexicographically smallest factorization of u.
MonomialIdeal colon_quadrics(const Graph& g, unsigned s, const BoundVector& c,
                             const Monomial& u);

namespace detail {
/// colon_quadrics without the precondition checks, for callers that already
/// hold the bounded powers.
MonomialIdeal colon_quadrics_unchecked(const Graph& g, const BoundVector& c, const Monomial& u,
                                       std::span<const Edge> factorization);
}  // namespace detail

/// Every ((I(G)^{s+1})_c : u), u in G((I(G)^s)_c), is generated in degree
/// two. Requires 1 <= s <= delta - 1.
Outcome verify_deg2(const Graph& g, unsigned s, const BoundVector& c);

/// Pairwise check of a fixed labeling of G((I(G)^s)_c) = `level` against
/// `next` = (I(G)^{s+1})_c: for j < i either u_j:u_i lies in (next : u_i), or
/// some r < i has u_r:u_i a variable dividing u_j:u_i.
bool is_rfirst_labeling(const MonomialIdeal& level, const MonomialIdeal& next,
                        std::span<const std::size_t> order);

/// Existence of such a labeling, by complete search. Returns the labeling or
/// nullopt. Throws CapExceeded when |G((I(G)^s)_c)| > cap.
std::optional<std::vector<std::size_t>> find_rfirst_labeling(const MonomialIdeal& level,
                                                             const MonomialIdeal& next,
                                                             std::size_t cap);

/// Existence check of the labeling for (G, s, c). Requires 1 <= s <= delta - 1.
Outcome verify_rfirst(const Graph& g, unsigned s, const BoundVector& c, std::size_t cap);

}  // namespace bpow
