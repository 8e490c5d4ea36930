#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bpow/graph.hpp"
#include "bpow/monomial.hpp"

namespace bpow {

inline constexpr std::size_t kDefaultSearchCap = 24;
/// Hard ceiling on search caps; the dead-set memo has 2^cap bits.
inline constexpr std::size_t kMaxSearchCap = 28;

/// Generic complete search for an ordering of items 0..m-1 in which every
/// item is admissible given the *set* of items placed before it. Subsets
/// proven to be dead ends are memoized as bitmasks. Candidates are tried in
/// increasing index order, so the lexicographically first valid ordering is
/// returned. Throws CapExceeded if m > cap.
std::optional<std::vector<std::size_t>> search_set_ordering(
    std::size_t m,
    const std::function<bool(std::uint32_t placed, std::size_t next)>& admissible,
    std::size_t cap = kDefaultSearchCap);

/// A linear quotients ordering of G(I). Only constructible through
/// validation, so holding one means the ordering has been checked.
class LQOrdering {
 public:
  static std::optional<LQOrdering> validated(MonomialIdeal ideal,
                                             std::vector<std::size_t> order);

  const MonomialIdeal& ideal() const noexcept { return ideal_; }
  /// order()[k] is the index into ideal().generators() of the k-th element.
  const std::vector<std::size_t>& order() const noexcept { return order_; }

 private:
  LQOrdering(MonomialIdeal ideal, std::vector<std::size_t> order)
      : ideal_(std::move(ideal)), order_(std::move(order)) {}

  MonomialIdeal ideal_;
  std::vector<std::size_t> order_;
};

/// True iff every prefix colon (u_1, ..., u_{k-1}) : u_k is generated by
/// variables. Throws PreconditionError unless `order` is a permutation.
bool is_lq_ordering(const MonomialIdeal& ideal, std::span<const std::size_t> order);

/// Complete backtracking search; nullopt iff I has no linear quotients.
std::optional<LQOrdering> find_lq_ordering(const MonomialIdeal& ideal,
                                           std::size_t cap = kDefaultSearchCap);

/// The ordering induced on the c-bounded generators of I. Throws
/// std::logic_error if the induced ordering is not a linear quotients
/// ordering of I_c.
LQOrdering restrict_lq_ordering(const LQOrdering& ordering, const BoundVector& c);

/// Whether (I(G)^s)_c has linear quotients for every s = 1..delta_c(I(G)).
/// Requires every c_i > 0. Stops at the first power without linear quotients.
bool all_bounded_powers_lq(const Graph& g, const BoundVector& c,
                           std::size_t cap = kDefaultSearchCap);

}  // namespace bpow
