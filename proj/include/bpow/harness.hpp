#pragma once

// Theorem suites over graph and ideal corpora, with deterministic reports.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bpow/homology.hpp"
#include "bpow/json_io.hpp"
#include "bpow/outcome.hpp"

namespace bpow {

/// How the bound vector of each instance is chosen.
struct CPolicy {
  enum class Kind { ones, constant, random, fixed };
  Kind kind = Kind::ones;
  Exponent k = 1;
  std::vector<Exponent> values;  // Kind::fixed

  /// "ones", "const:K", "random:K" or "explicit:c1,c2,...".
  static CPolicy parse(const std::string& text);
  std::string to_string() const;
};

struct CorpusSpec {
  enum class Kind { enumerate, graph6, random };
  Kind kind = Kind::enumerate;
  std::size_t nmin = 1;
  std::size_t nmax = 4;
  std::string path;          // Kind::graph6
  std::size_t count = 100;   // Kind::random (graphs or ideals)
  // Random monomial ideals (suites boston, istanbul).
  std::size_t ideal_gens = 6;
  Exponent max_exponent = 2;
};

struct SuiteConfig {
  std::string suite;
  CorpusSpec corpus;
  std::vector<CPolicy> c_policies{CPolicy{}};
  Field field{};
  std::uint64_t seed = 0;
  std::size_t max_gens = 24;  // cap for ordering searches
  unsigned max_s = 0;         // 0: no cap on the power range
  std::size_t jobs = 1;

  Json to_json() const;
};

struct CheckRecord {
  std::string name;
  Outcome outcome;
  Json detail;
};

struct InstanceRecord {
  std::size_t index = 0;
  Json instance;
  std::vector<CheckRecord> checks;
  Outcome outcome = Outcome::skipped;
  double millis = 0;
};

struct Tally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  void add(Outcome o);
};

struct VerificationReport {
  Json config;
  std::vector<InstanceRecord> records;  // sorted by index
  Tally instances;
  Tally checks;

  bool all_passed() const noexcept { return instances.fail == 0; }
  /// Full report; the "timings" section is omitted when `with_timings` is false.
  Json to_json(bool with_timings = true) const;
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Throws PreconditionError for an unknown suite and InputError/ParseError
/// for a malformed corpus.
VerificationReport run_suite(const SuiteConfig& cfg);

/// Draws the bound vector for instance `index` under `policy`.
BoundVector draw_bound(const CPolicy& policy, std::size_t n, std::uint64_t seed,
                       std::size_t index);

/// Random monomial ideal used by the ideal corpora: 1..max_gens generators
/// in 1..nmax variables with exponents in 0..max_exponent.
MonomialIdeal random_ideal(std::uint64_t seed, std::size_t index, std::size_t nmax,
                           std::size_t max_gens, Exponent max_exponent);

/// Random graph on nmin..nmax vertices, each pair an edge with probability 1/2.
Graph random_graph(std::uint64_t seed, std::size_t index, std::size_t nmin, std::size_t nmax);

}  // namespace bpow
