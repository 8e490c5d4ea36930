#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "bpow/errors.hpp"
#include "bpow/harness.hpp"

using namespace bpow;

namespace {

SuiteConfig graph_config(const std::string& suite, std::size_t nmax) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.corpus.nmax = nmax;
  return cfg;
}

void check_tallies(const VerificationReport& r) {
  Tally instances, checks;
  for (const auto& rec : r.records) {
    instances.add(rec.outcome);
    for (const auto& c : rec.checks) checks.add(c.outcome);
  }
  CHECK(instances.pass == r.instances.pass);
  CHECK(instances.fail == r.instances.fail);
  CHECK(instances.skipped == r.instances.skipped);
  CHECK(checks.pass == r.checks.pass);
  CHECK(checks.fail == r.checks.fail);
  CHECK(checks.skipped == r.checks.skipped);
  for (std::size_t k = 0; k < r.records.size(); ++k) CHECK(r.records[k].index == k);
  const Json j = r.to_json();
  CHECK(j["summary"]["instances"] == r.records.size());
  CHECK(j["counterexamples"].size() == r.checks.fail);
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("c-policies") {
    CHECK(CPolicy::parse("ones").kind == CPolicy::Kind::ones);
    CHECK(CPolicy::parse("const:3").k == 3);
    CHECK(CPolicy::parse("random:2").kind == CPolicy::Kind::random);
    CHECK(CPolicy::parse("explicit:2,1,1,2").values == std::vector<Exponent>{2, 1, 1, 2});
    for (const char* text : {"ones", "const:0", "random:4", "explicit:1,0"})
      CHECK(CPolicy::parse(text).to_string() == text);
    for (const char* text : {"", "twos", "const:", "const:x", "random:0", "explicit:1,,2", "const:-1"})
      CHECK_THROWS_AS(CPolicy::parse(text), InputError);
  }

  TEST_CASE("bound vector draws") {
    const auto random = CPolicy::parse("random:2");
    for (std::size_t k = 0; k < 500; ++k) {
      const auto c = draw_bound(random, 3, 9, k);
      CHECK(c.total() > 0);
      for (auto x : c.entries()) CHECK(x <= 2);
      CHECK(c == draw_bound(random, 3, 9, k));
    }
    CHECK(draw_bound(CPolicy::parse("const:2"), 3, 0, 0) == BoundVector{2, 2, 2});
    CHECK_THROWS_AS(draw_bound(CPolicy::parse("explicit:1,2"), 3, 0, 0), InputError);
  }

  TEST_CASE("random corpora are reproducible") {
    for (std::size_t k = 0; k < 50; ++k) {
      CHECK(random_graph(5, k, 2, 6) == random_graph(5, k, 2, 6));
      const auto g = random_graph(5, k, 2, 6);
      CHECK(g.order() >= 2);
      CHECK(g.order() <= 6);
      const auto I = random_ideal(5, k, 5, 6, 2);
      CHECK(I == random_ideal(5, k, 5, 6, 2));
      CHECK(I.ambient() <= 5);
      CHECK(I.size() <= 6);
      CHECK_FALSE(I.contains(Monomial::one(I.ambient())));
    }
  }

  TEST_CASE("fixed instance suite") {
    SuiteConfig cfg;
    cfg.suite = "remark45";
    auto r = run_suite(cfg);
    REQUIRE(r.records.size() == 1);
    CHECK(r.records[0].outcome == Outcome::pass);
    CHECK(r.all_passed());
    check_tallies(r);
  }

  TEST_CASE("every suite runs cleanly on a small corpus") {
    for (const auto& name : suite_names()) {
      SuiteConfig cfg = graph_config(name, 3);
      cfg.c_policies = {CPolicy::parse("ones"), CPolicy::parse("const:2")};
      cfg.corpus.count = 20;
      auto r = run_suite(cfg);
      INFO(name);
      CHECK(r.all_passed());
      CHECK(r.instances.fail == 0);
      check_tallies(r);
    }
  }

  TEST_CASE("reports do not depend on the number of jobs") {
    for (const char* suite : {"regmain", "edge-lq", "istanbul"}) {
      SuiteConfig cfg = graph_config(suite, 4);
      cfg.corpus.kind = CorpusSpec::Kind::random;
      cfg.corpus.count = 30;
      cfg.c_policies = {CPolicy::parse("random:2")};
      cfg.seed = 17;
      const auto one = run_suite(cfg).to_json(false).dump();
      cfg.jobs = 4;
      const auto four = run_suite(cfg).to_json(false).dump();
      CHECK(one == four);
      CHECK(run_suite(cfg).to_json().contains("timings"));
      CHECK_FALSE(run_suite(cfg).to_json(false).contains("timings"));
    }
  }

  TEST_CASE("the seed is recorded") {
    SuiteConfig cfg = graph_config("delta", 2);
    cfg.seed = 123;
    CHECK(run_suite(cfg).to_json()["config"]["seed"] == 123);
  }

  TEST_CASE("squarefree suite forces unit bounds") {
    SuiteConfig cfg = graph_config("squarefree-lq", 3);
    cfg.c_policies = {CPolicy::parse("const:2")};
    auto r = run_suite(cfg);
    for (const auto& rec : r.records) CHECK(rec.instance["c_policy"] == "ones");
  }

  TEST_CASE("zero bounds are skipped where positivity is required") {
    SuiteConfig cfg = graph_config("edge-lq", 3);
    cfg.c_policies = {CPolicy::parse("explicit:1,0,1")};
    cfg.corpus.nmin = 3;
    auto r = run_suite(cfg);
    CHECK(r.records.size() == 8);
    CHECK(r.instances.skipped == 8);
  }

  TEST_CASE("graph6 corpora") {
    const std::string path = "bpow_harness_corpus.g6";
    {
      std::ofstream f(path);
      f << "C~\nD?{\n\nCr\n";
    }
    SuiteConfig cfg = graph_config("essen", 0);
    cfg.corpus.kind = CorpusSpec::Kind::graph6;
    cfg.corpus.path = path;
    auto r = run_suite(cfg);
    CHECK(r.records.size() == 3);
    CHECK(r.all_passed());
    {
      std::ofstream f(path);
    }
    r = run_suite(cfg);
    CHECK(r.records.empty());
    CHECK(r.all_passed());
    {
      std::ofstream f(path);
      f << "C~\nC!\n";
    }
    CHECK_THROWS_AS(run_suite(cfg), InputError);
    std::remove(path.c_str());
    CHECK_THROWS_AS(run_suite(cfg), InputError);
  }

  TEST_CASE("configuration errors") {
    CHECK_THROWS_AS(run_suite(graph_config("nonesuch", 3)), PreconditionError);
    SuiteConfig cfg = graph_config("delta", 3);
    cfg.max_gens = 0;
    CHECK_THROWS_AS(run_suite(cfg), PreconditionError);
  }
}
