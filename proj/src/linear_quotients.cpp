#include "bpow/linear_quotients.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "bpow/bounded_powers.hpp"

namespace bpow {

namespace {

// Pairwise data for "(placed) : next is generated by variables".
struct ColonTable {
  std::size_t m;
  std::vector<int> var;              // var[h*m+g]: k if h:g = x_k, else -1
  std::vector<std::uint64_t> supp;   // supp[h*m+g]: support of h:g

  explicit ColonTable(const MonomialIdeal& ideal) : m(ideal.size()), var(m * m, -1), supp(m * m, 0) {
    for (std::size_t h = 0; h < m; ++h)
      for (std::size_t g = 0; g < m; ++g) {
        if (h == g) continue;
        Monomial q = colon(ideal[h], ideal[g]);
        supp[h * m + g] = q.support_mask();
        if (q.degree() == 1)
          var[h * m + g] = static_cast<int>(std::countr_zero(supp[h * m + g]));
      }
  }

  bool admissible(std::uint32_t placed, std::size_t g) const {
    std::uint64_t linear = 0;
    for (std::uint32_t p = placed; p; p &= p - 1) {
      std::size_t h = static_cast<std::size_t>(std::countr_zero(p));
      if (var[h * m + g] >= 0) linear |= std::uint64_t{1} << var[h * m + g];
    }
    for (std::uint32_t p = placed; p; p &= p - 1) {
      std::size_t h = static_cast<std::size_t>(std::countr_zero(p));
      if (!(supp[h * m + g] & linear)) return false;
    }
    return true;
  }
};

bool is_permutation_of_indices(std::span<const std::size_t> order, std::size_t m) {
  if (order.size() != m) return false;
  std::vector<bool> seen(m, false);
  for (auto k : order) {
    if (k >= m || seen[k]) return false;
    seen[k] = true;
  }
  return true;
}

}  // namespace

std::optional<std::vector<std::size_t>> search_set_ordering(
    std::size_t m,
    const std::function<bool(std::uint32_t, std::size_t)>& admissible,
    std::size_t cap) {
  cap = std::min(cap, kMaxSearchCap);
  if (m > cap) throw CapExceeded(m, cap);
  if (m == 0) return std::vector<std::size_t>{};
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  std::vector<bool> dead(std::size_t{1} << m, false);
  std::vector<std::size_t> order;
  order.reserve(m);

  std::function<bool(std::uint32_t)> extend = [&](std::uint32_t placed) {
    if (placed == full) return true;
    for (std::size_t g = 0; g < m; ++g) {
      const std::uint32_t b = std::uint32_t{1} << g;
      if ((placed & b) || dead[placed | b] || !admissible(placed, g)) continue;
      order.push_back(g);
      if (extend(placed | b)) return true;
      order.pop_back();
      dead[placed | b] = true;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return order;
}

std::optional<LQOrdering> LQOrdering::validated(MonomialIdeal ideal,
                                                std::vector<std::size_t> order) {
  if (!is_lq_ordering(ideal, order)) return std::nullopt;
  return LQOrdering(std::move(ideal), std::move(order));
}

bool is_lq_ordering(const MonomialIdeal& ideal, std::span<const std::size_t> order) {
  if (!is_permutation_of_indices(order, ideal.size()))
    throw PreconditionError("ordering is not a permutation of generator indices");
  const auto& gens = ideal.generators();
  for (std::size_t k = 1; k < order.size(); ++k) {
    std::vector<Monomial> quotients;
    for (std::size_t j = 0; j < k; ++j) quotients.push_back(colon(gens[order[j]], gens[order[k]]));
    MonomialIdeal q = MonomialIdeal::minimalize(ideal.ambient(), std::move(quotients));
    for (const auto& g : q.generators())
      if (g.degree() != 1) return false;
  }
  return true;
}

std::optional<LQOrdering> find_lq_ordering(const MonomialIdeal& ideal, std::size_t cap) {
  const std::size_t m = ideal.size();
  if (m > std::min(cap, kMaxSearchCap)) throw CapExceeded(m, std::min(cap, kMaxSearchCap));
  ColonTable table(ideal);
  auto order = search_set_ordering(
      m, [&](std::uint32_t placed, std::size_t g) { return table.admissible(placed, g); }, cap);
  if (!order) return std::nullopt;
  auto result = LQOrdering::validated(ideal, std::move(*order));
  if (!result) throw std::logic_error("ordering search returned an invalid ordering");
  return result;
}

LQOrdering restrict_lq_ordering(const LQOrdering& ordering, const BoundVector& c) {
  const MonomialIdeal& ideal = ordering.ideal();
  MonomialIdeal restricted = restrict_to(ideal, c);
  std::vector<std::size_t> induced;
  for (std::size_t k : ordering.order())
    if (is_bounded(ideal[k], c)) induced.push_back(restricted.index_of(ideal[k]));
  auto result = LQOrdering::validated(std::move(restricted), std::move(induced));
  if (!result)
    throw std::logic_error("induced ordering on " + ideal.to_string() + " restricted to " +
                           c.to_string() + " is not a linear quotients ordering");
  return std::move(*result);
}

bool all_bounded_powers_lq(const Graph& g, const BoundVector& c, std::size_t cap) {
  check_ambient(g.order(), c.ambient());
  if (!c.all_positive()) throw PreconditionError("all_bounded_powers_lq needs every c_i > 0");
  for (const auto& level : bounded_power_levels(edge_ideal(g), c))
    if (!find_lq_ordering(level, cap)) return false;
  return true;
}

}  // namespace bpow
