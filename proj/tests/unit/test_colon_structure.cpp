#include <doctest.h>

#include "bpow/bounded_powers.hpp"
#include "bpow/colon_structure.hpp"
#include "bpow/errors.hpp"
#include "oracles.hpp"

using namespace bpow;

TEST_SUITE("colon_structure") {
  TEST_CASE("even-connection on a path") {
    const Graph p4 = Graph::path(4);
    const std::vector<Edge> product{Edge(1, 2)};
    auto walk = find_even_connection(p4, product, 0, 3);
    REQUIRE(walk);
    CHECK(walk->path == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(walk->length() == 1);
    CHECK(is_even_connection(p4, product, 0, 3, *walk));
    CHECK_FALSE(find_even_connection(p4, {}, 0, 3));
    CHECK_FALSE(find_even_connection(p4, product, 0, 2));

    EvenConnection bad{{0, 1, 2, 3}, {0}};
    CHECK_FALSE(is_even_connection(p4, product, 0, 2, bad));
    bad.path = {0, 2, 1, 3};
    CHECK_FALSE(is_even_connection(p4, product, 0, 3, bad));
  }

  TEST_CASE("even-connection respects multiplicities") {
    // The pendant edge {0,4} plays no part in the walk from 0 to 3.
    const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}});
    const std::vector<Edge> once{Edge(1, 2)};
    auto walk = find_even_connection(g, once, 0, 3);
    REQUIRE(walk);
    CHECK(walk->path == std::vector<std::size_t>{0, 1, 2, 3});
    // A self-connection a = b uses an odd cycle through a product edge.
    const Graph tri = Graph::complete(3);
    auto loop = find_even_connection(tri, std::vector<Edge>{Edge(1, 2)}, 0, 0);
    REQUIRE(loop);
    CHECK(loop->path == std::vector<std::size_t>{0, 1, 2, 0});
    CHECK(is_even_connection(tri, std::vector<Edge>{Edge(1, 2)}, 0, 0, *loop));
    // Walk 0,1,2,3,4,5 over a path needs {1,2} and {3,4}.
    const Graph p6 = Graph::path(6);
    CHECK_FALSE(find_even_connection(p6, std::vector<Edge>{Edge(1, 2)}, 0, 5));
    auto two = find_even_connection(p6, std::vector<Edge>{Edge(1, 2), Edge(3, 4)}, 0, 5);
    REQUIRE(two);
    CHECK(two->length() == 2);
  }

  TEST_CASE("quadric generators of colon ideals") {
    const Graph p4 = Graph::path(4);
    auto q = colon_quadrics(p4, 1, BoundVector::ones(4), Monomial{0, 1, 1, 0});
    CHECK(q == MonomialIdeal::minimalize(4, {Monomial{1, 0, 0, 1}}));

    const Graph tri = Graph::complete(3);
    auto levels = bounded_power_levels(edge_ideal(tri), BoundVector::ones(3));
    CHECK(levels.size() == 1);
    // No second power survives, so the colon is zero and s = 1 is out of range.
    CHECK(oracle::colon_gens(bounded_power(edge_ideal(tri), 2, BoundVector::ones(3)), {1, 1, 0}).empty());
    CHECK_THROWS_AS(colon_quadrics(tri, 1, BoundVector::ones(3), Monomial{1, 1, 0}), PreconditionError);
    CHECK_THROWS_AS(colon_quadrics(Graph::path(2), 1, BoundVector::ones(2), Monomial{1, 1}), PreconditionError);
    CHECK_THROWS_AS(colon_quadrics(p4, 1, BoundVector::ones(4), Monomial{1, 0, 1, 0}), PreconditionError);
    CHECK_THROWS_AS(colon_quadrics(p4, 0, BoundVector::ones(4), Monomial{0, 1, 1, 0}), PreconditionError);
    const std::vector<Edge> wrong{Edge(0, 1)};
    CHECK_THROWS_AS(colon_quadrics(p4, 1, BoundVector::ones(4), Monomial{0, 1, 1, 0}, wrong), PreconditionError);
  }

  TEST_CASE("quadrics match the box colon over small graphs") {
    auto run = [](std::size_t n, const BoundVector& c) {
      for (const auto& g : enumerate_labeled_graphs(n)) {
        auto levels = bounded_power_levels(edge_ideal(g), c);
        for (unsigned s = 1; s + 1 <= levels.size(); ++s)
          for (const auto& u : levels[s - 1].generators()) {
            auto expected = oracle::colon_gens(levels[s], oracle::exps(u));
            for (const auto& f : edge_factorizations(g, u, s, 4))
              CHECK(oracle::gens(colon_quadrics(g, s, c, u, f)) == expected);
          }
      }
    };
    for (std::size_t n = 2; n <= 5; ++n) run(n, BoundVector::ones(n));
    for (std::size_t n = 2; n <= 4; ++n) run(n, BoundVector::constant(n, 2));
    run(4, BoundVector{2, 1, 1, 2});
  }

  TEST_CASE("degree-two colons") {
    for (std::size_t n = 2; n <= 5; ++n)
      for (const auto& g : enumerate_labeled_graphs(n)) {
        const unsigned d = delta(edge_ideal(g), BoundVector::ones(n));
        for (unsigned s = 1; s < d; ++s) CHECK(verify_deg2(g, s, BoundVector::ones(n)) == Outcome::pass);
      }
    CHECK_THROWS_AS(verify_deg2(Graph::path(2), 1, BoundVector::ones(2)), PreconditionError);
  }

  TEST_CASE("labelings of consecutive bounded powers") {
    for (std::size_t n = 2; n <= 4; ++n)
      for (const auto& g : enumerate_labeled_graphs(n)) {
        const BoundVector c = BoundVector::constant(n, 2);
        auto levels = bounded_power_levels(edge_ideal(g), c);
        for (unsigned s = 1; s < levels.size(); ++s) {
          auto labeling = find_rfirst_labeling(levels[s - 1], levels[s], 24);
          REQUIRE(labeling);
          CHECK(is_rfirst_labeling(levels[s - 1], levels[s], *labeling));
          CHECK(verify_rfirst(g, s, c, 24) == Outcome::pass);
        }
      }
    // Cap refusals are reported, not failed.
    const Graph k5 = Graph::complete(5);
    CHECK(verify_rfirst(k5, 1, BoundVector::constant(5, 2), 4) == Outcome::skipped);
  }
}
