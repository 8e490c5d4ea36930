#include <doctest.h>

#include <random>

#include "bpow/bounded_powers.hpp"
#include "bpow/errors.hpp"
#include "bpow/homology.hpp"
#include "oracles.hpp"

using namespace bpow;

namespace {

std::vector<std::size_t> range(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::uint64_t face(std::initializer_list<int> vs) {
  std::uint64_t m = 0;
  for (int v : vs) m |= std::uint64_t{1} << (v - 1);
  return m;
}

// Six-vertex triangulation of the real projective plane.
const std::vector<std::uint64_t> kProjectivePlane{
    face({1, 2, 4}), face({1, 2, 6}), face({1, 3, 5}), face({1, 3, 6}), face({1, 4, 5}),
    face({2, 3, 4}), face({2, 3, 5}), face({2, 5, 6}), face({3, 4, 6}), face({4, 5, 6})};

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

oracle::Betti entries(const BettiTable& t) { return {t.entries().begin(), t.entries().end()}; }

// Stanley-Reisner ideal: minimal nonfaces of the complex.
MonomialIdeal stanley_reisner(std::size_t n, const SimplicialComplex& c) {
  std::vector<Monomial> gens;
  for (std::uint64_t f = 1; f < (std::uint64_t{1} << n); ++f) {
    if (c.contains(f)) continue;
    std::vector<Exponent> e(n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i] = f >> i & 1;
    gens.emplace_back(e);
  }
  return MonomialIdeal::minimalize(n, gens);
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("fields") {
    CHECK(Field().characteristic() == 0);
    CHECK(Field(7).characteristic() == 7);
    CHECK_THROWS_AS(Field(4), PreconditionError);
    CHECK_THROWS_AS(Field(1), PreconditionError);
  }

  TEST_CASE("complexes") {
    auto c = SimplicialComplex::from_faces(range(3), {face({1, 2, 3})});
    CHECK(c.faces().size() == 8);
    CHECK(c.dimension() == 2);
    CHECK(SimplicialComplex::from_faces(range(2), {0}).dimension() == -1);
    CHECK(SimplicialComplex::void_complex(range(2)).dimension() == -2);
    CHECK_THROWS_AS(SimplicialComplex::from_faces(range(2), {face({3})}), PreconditionError);
  }

  TEST_CASE("reduced homology of small complexes") {
    auto simplex = SimplicialComplex::from_faces(range(3), {face({1, 2, 3})});
    for (int i = -1; i <= 2; ++i) CHECK(homology_rank(simplex, i) == 0);
    auto circle = SimplicialComplex::from_faces(range(3), {face({1, 2}), face({2, 3}), face({1, 3})});
    CHECK(homology_rank(circle, 0) == 0);
    CHECK(homology_rank(circle, 1) == 1);
    auto points = SimplicialComplex::from_faces(range(3), {face({1}), face({2}), face({3})});
    CHECK(homology_rank(points, 0) == 2);
    auto irrelevant = SimplicialComplex::from_faces(range(0), {0});
    CHECK(homology_rank(irrelevant, -1) == 1);
    CHECK(homology_rank(SimplicialComplex::void_complex(range(0)), -1) == 0);
  }

  TEST_CASE("homology depends on the characteristic") {
    auto rp2 = SimplicialComplex::from_faces(range(6), kProjectivePlane);
    std::vector<std::uint64_t> all(rp2.faces().begin(), rp2.faces().end());
    for (std::uint32_t p : {0u, 2u, 3u})
      for (int i = -1; i <= 2; ++i) CHECK(homology_rank(rp2, i, Field(p)) == oracle::reduced_homology(all, i, p));
    CHECK(homology_rank(rp2, 1, Field(0)) == 0);
    CHECK(homology_rank(rp2, 1, Field(2)) == 1);
    CHECK(homology_rank(rp2, 2, Field(2)) == 1);

    auto I = stanley_reisner(6, rp2);
    const int reg0 = regularity(I, Field(0));
    const int reg2 = regularity(I, Field(2));
    CHECK(reg0 == 3);
    CHECK(reg2 == 4);
    CHECK(entries(betti_table(I, Field(2))) == oracle::hochster_betti(I, 2));
    CHECK(entries(betti_table(I, Field(0))) == oracle::taylor_betti(I, 0));
  }

  TEST_CASE("Betti numbers of small ideals") {
    auto path = edge_ideal(Graph::path(4));
    auto t = betti_table(path);
    CHECK(t.get(0, 2) == 3);
    CHECK(t.get(1, 3) == 2);
    CHECK(t.entries().size() == 2);
    CHECK(t.regularity() == 2);
    auto two_edges = edge_ideal(Graph(4, {{0, 1}, {2, 3}}));
    CHECK(betti_table(two_edges).get(1, 4) == 1);
    CHECK(regularity(two_edges) == 3);
    CHECK(regularity(MonomialIdeal::minimalize(1, {Monomial{4}})) == 4);
    CHECK(has_linear_resolution(edge_ideal(Graph::complete(4))));
    CHECK(has_linear_resolution(path));
    CHECK_FALSE(has_linear_resolution(two_edges));
    CHECK_THROWS_AS(betti_table(MonomialIdeal::zero(2)), PreconditionError);
    CHECK_THROWS_AS(has_linear_resolution(MonomialIdeal::minimalize(2, {Monomial{2, 0}, Monomial{0, 1}})),
                    PreconditionError);
  }

  TEST_CASE("polarization") {
    auto I = MonomialIdeal::minimalize(2, {Monomial{2, 0}, Monomial{1, 3}});
    auto pol = polarize(I);
    CHECK(pol.map.target_ambient() == 5);
    CHECK(pol.map.target(1, 1) == 2);
    CHECK(pol.map.apply(Monomial{1, 2}) == Monomial{1, 0, 1, 1, 0});
    CHECK_THROWS(pol.map.target(0, 3));
    for (const auto& g : pol.ideal.generators()) CHECK(g.is_squarefree());
    CHECK(pol.ideal.size() == I.size());
    CHECK_THROWS_AS(polarize(MonomialIdeal::zero(2)), PreconditionError);
  }

  TEST_CASE("upper Koszul complexes") {
    auto I = edge_ideal(Graph::path(3));
    auto k = upper_koszul(I, Monomial{1, 1, 1});
    CHECK(k.vertices() == std::vector<std::size_t>{0, 1, 2});
    CHECK(k.contains(face({1})));
    CHECK(k.contains(face({3})));
    CHECK_FALSE(k.contains(face({2})));
    CHECK_THROWS_AS(upper_koszul(I, Monomial{1, 0, 1}), PreconditionError);
    CHECK(lcm_lattice(I).size() == 3);
  }

  TEST_CASE("Betti tables agree with the Taylor and restriction oracles") {
    std::mt19937 rng(51);
    for (int t = 0; t < 120; ++t) {
      auto I = random_ideal(rng, 1 + rng() % 4, 1 + rng() % 5, 2);
      const std::uint32_t p = t % 3 == 0 ? 2 : 0;
      const auto table = betti_table(I, Field(p));
      const auto expected = oracle::taylor_betti(I, p);
      CHECK(entries(table) == expected);
      CHECK(entries(table) == oracle::hochster_betti(I, p));
      CHECK(regularity(I, Field(p)) == regularity(polarize(I).ideal, Field(p)));
      CHECK(betti_table(polarize(I).ideal, Field(p)) == table);
    }
  }

  TEST_CASE("top bounded powers have linear resolutions") {
    for (std::size_t n = 2; n <= 4; ++n)
      for (const auto& g : enumerate_labeled_graphs(n)) {
        auto levels = bounded_power_levels(edge_ideal(g), BoundVector::constant(n, 2));
        if (levels.empty()) continue;
        CHECK(has_linear_resolution(levels.back()));
      }
  }
}
