#include <doctest.h>

#include <numeric>
#include <random>

#include "bpow/bounded_powers.hpp"
#include "bpow/errors.hpp"
#include "bpow/linear_quotients.hpp"
#include "oracles.hpp"

using namespace bpow;

namespace {

MonomialIdeal random_ideal(std::mt19937& rng, std::size_t n, std::size_t m, Exponent e) {
  std::uniform_int_distribution<Exponent> d(0, e);
  std::vector<Monomial> gens;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<Exponent> x(n);
    for (auto& v : x) v = d(rng);
    if (std::all_of(x.begin(), x.end(), [](Exponent v) { return v == 0; })) x[0] = 1;
    gens.emplace_back(x);
  }
  return MonomialIdeal::minimalize(n, gens);
}

std::vector<oracle::Exps> ordered_exps(const MonomialIdeal& I, const std::vector<std::size_t>& order) {
  std::vector<oracle::Exps> out;
  for (auto k : order) out.push_back(oracle::exps(I[k]));
  return out;
}

}  // namespace

TEST_SUITE("linear_quotients") {
  TEST_CASE("orderings of a path ideal") {
    auto I = edge_ideal(Graph::path(4));  // (x3x4, x2x3, x1x2)
    CHECK(is_lq_ordering(I, std::vector<std::size_t>{0, 1, 2}));
    CHECK_FALSE(is_lq_ordering(I, std::vector<std::size_t>{0, 2, 1}));
    CHECK_THROWS_AS(is_lq_ordering(I, std::vector<std::size_t>{0, 0, 1}), PreconditionError);
    CHECK_THROWS_AS(is_lq_ordering(I, std::vector<std::size_t>{0, 1}), PreconditionError);
    auto found = find_lq_ordering(I);
    REQUIRE(found);
    CHECK(found->order() == std::vector<std::size_t>{0, 1, 2});
  }

  TEST_CASE("ideals without linear quotients") {
    auto two_edges = edge_ideal(Graph(4, {{0, 1}, {2, 3}}));
    CHECK_FALSE(find_lq_ordering(two_edges));
    auto remark = MonomialIdeal::minimalize(5, {Monomial{1, 1, 1, 0, 0}, Monomial{1, 0, 0, 1, 1}});
    CHECK_FALSE(find_lq_ordering(remark));
    CHECK(find_lq_ordering(MonomialIdeal::zero(3)));
    CHECK(find_lq_ordering(MonomialIdeal::minimalize(3, {Monomial{1, 2, 0}})));
  }

  TEST_CASE("validated orderings") {
    auto I = edge_ideal(Graph::path(4));
    CHECK(LQOrdering::validated(I, {2, 1, 0}));
    CHECK_FALSE(LQOrdering::validated(I, {0, 2, 1}));
    CHECK_THROWS_AS(LQOrdering::validated(I, {0, 1}), PreconditionError);
  }

  TEST_CASE("the fixed-order check agrees with the definition") {
    std::mt19937 rng(31);
    for (int t = 0; t < 300; ++t) {
      auto I = random_ideal(rng, 1 + rng() % 4, 1 + rng() % 5, 2);
      std::vector<std::size_t> order(I.size());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      CHECK(is_lq_ordering(I, order) == oracle::linear_quotients(ordered_exps(I, order)));
    }
  }

  TEST_CASE("search agrees with trying every permutation") {
    std::mt19937 rng(32);
    for (int t = 0; t < 300; ++t) {
      auto I = random_ideal(rng, 1 + rng() % 5, 1 + rng() % 6, 2);
      auto found = find_lq_ordering(I);
      CHECK(found.has_value() == oracle::has_linear_quotients(oracle::gens(I)));
      if (found) CHECK(oracle::linear_quotients(ordered_exps(I, found->order())));
    }
  }

  TEST_CASE("induced orderings on bounded generators") {
    std::mt19937 rng(33);
    int checked = 0;
    for (int t = 0; t < 400; ++t) {
      auto I = random_ideal(rng, 1 + rng() % 5, 1 + rng() % 6, 2);
      auto ord = find_lq_ordering(I);
      if (!ord) continue;
      std::vector<Exponent> c(I.ambient());
      for (auto& x : c) x = rng() % 3;
      const BoundVector cv(c);
      auto induced = restrict_lq_ordering(*ord, cv);
      CHECK(induced.ideal() == restrict_to(I, cv));
      CHECK(is_lq_ordering(induced.ideal(), induced.order()));
      // The induced order keeps the relative order of the surviving generators.
      std::vector<std::size_t> positions;
      for (auto k : induced.order()) {
        const auto& g = induced.ideal()[k];
        positions.push_back(static_cast<std::size_t>(
            std::find(ord->order().begin(), ord->order().end(), I.index_of(g)) - ord->order().begin()));
      }
      CHECK(std::is_sorted(positions.begin(), positions.end()));
      ++checked;
    }
    CHECK(checked > 50);
  }

  TEST_CASE("search cap") {
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < 10; ++i) gens.push_back(Monomial::variable(10, i));
    auto I = MonomialIdeal::minimalize(10, gens);
    CHECK_THROWS_AS(find_lq_ordering(I, 9), CapExceeded);
    CHECK(find_lq_ordering(I, 10));
    CHECK(find_lq_ordering(I, 1000));  // clamped to the ceiling
  }

  TEST_CASE("generic set-ordering search") {
    // Item k may only follow item k - 1.
    auto chain = [](std::uint32_t placed, std::size_t next) {
      return next == 0 || ((placed >> (next - 1)) & 1u);
    };
    auto order = search_set_ordering(5, chain);
    REQUIRE(order);
    CHECK(*order == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK_FALSE(search_set_ordering(3, [](std::uint32_t, std::size_t) { return false; }));
    CHECK(search_set_ordering(0, chain));
  }

  TEST_CASE("edge ideal powers with linear quotients") {
    CHECK(all_bounded_powers_lq(Graph::path(4), BoundVector::ones(4)));
    CHECK_FALSE(all_bounded_powers_lq(Graph(4, {{0, 1}, {2, 3}}), BoundVector::ones(4)));
    CHECK_THROWS_AS(all_bounded_powers_lq(Graph::path(3), BoundVector{1, 0, 1}), PreconditionError);
    for (std::size_t n = 1; n <= 5; ++n)
      for (const auto& g : enumerate_labeled_graphs(n)) {
        const bool cochordal = is_chordal(complement(g));
        CHECK(all_bounded_powers_lq(g, BoundVector::ones(n)) == cochordal);
        if (n <= 4) CHECK(all_bounded_powers_lq(g, BoundVector::constant(n, 2)) == cochordal);
      }
  }
}
