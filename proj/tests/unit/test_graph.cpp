#include <doctest.h>

#include "bpow/errors.hpp"
#include "bpow/graph.hpp"
#include "oracles.hpp"

using namespace bpow;

TEST_SUITE("graph") {
  TEST_CASE("construction") {
    Graph g(4, {{0, 1}, {1, 2}, {1, 0}});
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.neighbors(1) == std::vector<std::size_t>{0, 2});
    CHECK_THROWS(Graph(3, {{1, 1}}));
    CHECK_THROWS(Graph(0));
    CHECK(Graph::cycle(5).edge_count() == 5);
    CHECK(Graph::complete(5).edge_count() == 10);
    CHECK(complement(Graph::complete(4)).edge_count() == 0);
    CHECK(complement(complement(Graph::path(5))) == Graph::path(5));
  }

  TEST_CASE("edge ideal") {
    auto I = edge_ideal(Graph::path(3));
    CHECK(I.to_string() == "(x2x3, x1x2)");
    CHECK(edge_ideal(Graph(3)).is_zero());
  }

  TEST_CASE("vertex deletion") {
    Graph g = Graph::cycle(4);
    CHECK(delete_vertices(g, {0}).order() == 4);
    CHECK(delete_vertices(g, {0}).edge_count() == 2);
    Graph h = compact_delete_vertices(g, {0});
    CHECK(h.order() == 3);
    CHECK(h == Graph::path(3));
  }

  TEST_CASE("graph6 round trip on every small labeled graph") {
    for (std::size_t n = 1; n <= 5; ++n)
      for (const auto& g : enumerate_labeled_graphs(n)) CHECK(parse_graph6(to_graph6(g)) == g);
  }

  TEST_CASE("graph6 known encodings") {
    Graph star = parse_graph6("D?{");
    CHECK(star.order() == 5);
    CHECK(star.edge_count() == 4);
    for (std::size_t v = 0; v < 4; ++v) CHECK(star.adjacent(v, 4));
    CHECK(to_graph6(Graph::complete(4)) == "C~");
    CHECK(parse_graph6(">>graph6<<C~") == Graph::complete(4));
    CHECK(to_graph6(Graph(1)) == "@");
  }

  TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("D?"), ParseError);
    CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);
    CHECK_THROWS_AS(parse_graph6("B!"), ParseError);
    CHECK_THROWS_AS(parse_graph6("?"), ParseError);  // zero vertices
    try {
      parse_graph6("D?\x01");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 2);
    }
  }

  TEST_CASE("labeled enumeration") {
    CHECK(pair_count(5) == 10);
    std::size_t count = 0;
    for (const auto& g : enumerate_labeled_graphs(4)) {
      (void)g;
      ++count;
    }
    CHECK(count == 64);
    LabeledGraphRange all(4), shard(4, 10, 20);
    CHECK(shard.size() == 10);
    CHECK(shard[0] == all[10]);
    CHECK(labeled_graph(3, 0b111) == Graph::complete(3));
  }

  TEST_CASE("chordality agrees with the induced cycle search") {
    for (std::size_t n = 1; n <= 6; ++n)
      for (const auto& g : enumerate_labeled_graphs(n)) CHECK(is_chordal(g) == oracle::chordal(g));
    CHECK_FALSE(is_chordal(Graph::cycle(4)));
    CHECK(is_chordal(Graph::complete(5)));
  }

  TEST_CASE("matching number agrees with exhaustive search") {
    for (std::size_t n = 1; n <= 6; ++n)
      for (const auto& g : enumerate_labeled_graphs(n))
        CHECK(matching_number(g) == oracle::matching_number(g));
    CHECK(matching_number(Graph::path(4)) == 2);
  }
}
