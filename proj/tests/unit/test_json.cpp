#include <doctest.h>

#include "bpow/bounded_powers.hpp"
#include "bpow/json_io.hpp"

using namespace bpow;

TEST_SUITE("json") {
  TEST_CASE("round trips") {
    auto I = MonomialIdeal::minimalize(3, {Monomial{2, 0, 1}, Monomial{0, 1, 1}});
    CHECK(ideal_from_json(to_json(I)) == I);
    CHECK(to_json(I).dump() == R"({"gens":[[0,1,1],[2,0,1]],"n":3})");
    CHECK(ideal_from_json(to_json(MonomialIdeal::zero(2))).is_zero());

    Graph g = Graph::cycle(4);
    CHECK(graph_from_json(to_json(g)) == g);
    CHECK(to_json(Graph::path(3)).dump() == R"({"edges":[[1,2],[2,3]],"n":3})");

    auto t = betti_table(edge_ideal(Graph::path(4)));
    CHECK(betti_from_json(to_json(t)) == t);
    CHECK(to_json(t).dump() == R"({"char":0,"entries":[[0,2,3],[1,3,2]]})");

    CHECK(to_json(Monomial{1, 0, 2}).dump() == "[1,0,2]");
    CHECK(to_json(BoundVector{2, 2}).dump() == "[2,2]");
    CHECK(monomial_from_json(Json::parse("[1,0,2]"), 3) == Monomial{1, 0, 2});
    CHECK(bound_from_json(Json::parse("[0,3]"), 2) == BoundVector{0, 3});
  }

  TEST_CASE("ideals are canonicalized on input") {
    auto I = ideal_from_json(Json::parse(R"({"n":2,"gens":[[1,1],[2,1],[0,2]]})"));
    CHECK(I.size() == 2);
  }

  TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"gens":[[1]]})")), InputError);
    CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"n":2,"gens":[[1]]})")), InputError);
    CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"n":1,"gens":[[-1]]})")), InputError);
    CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"n":1,"gens":[[1.5]]})")), InputError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":3,"edges":[[1,4]]})")), InputError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":3,"edges":[[0,1]]})")), InputError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":3,"edges":[[2,2]]})")), InputError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":3,"edges":[[1,2,3]]})")), InputError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":0,"edges":[]})")), InputError);
    CHECK_THROWS_AS(bound_from_json(Json::parse("[1,1,1]"), 2), InputError);
    CHECK_THROWS_AS(betti_from_json(Json::parse(R"({"char":0,"entries":[[0,1]]})")), InputError);
  }
}
