#include "bpow/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "bpow/bounded_powers.hpp"
#include "bpow/colon_structure.hpp"
#include "bpow/linear_quotients.hpp"
#include "bpow/polymatroid.hpp"

namespace bpow {

namespace {

// Per-instance generator: reproducible from (seed, index, stream) alone so
// that results do not depend on scheduling.
std::mt19937_64 instance_rng(std::uint64_t seed, std::size_t index, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

template <class Int>
Int uniform(std::mt19937_64& rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

constexpr std::uint64_t kStreamGraph = 1;
constexpr std::uint64_t kStreamBound = 2;
constexpr std::uint64_t kStreamIdeal = 3;
constexpr std::uint64_t kStreamSample = 4;

struct Instance {
  std::optional<Graph> graph;
  std::optional<MonomialIdeal> ideal;
  BoundVector c;
  Json payload;
};

using Checks = std::vector<CheckRecord>;

struct Context {
  const SuiteConfig& cfg;
  const Instance& inst;
};

void add(Checks& out, std::string name, Outcome o, Json detail = Json::object()) {
  out.push_back({std::move(name), o, std::move(detail)});
}

void skip(Checks& out, std::string name, const std::string& why) {
  add(out, std::move(name), Outcome::skipped, {{"reason", why}});
}

unsigned top_level(const SuiteConfig& cfg, std::size_t levels) {
  auto top = static_cast<unsigned>(levels);
  return cfg.max_s ? std::min(top, cfg.max_s) : top;
}

// Regularity per position of `levels`, computed on demand.
class RegCache {
 public:
  RegCache(const std::vector<MonomialIdeal>& levels, Field f) : levels_(levels), f_(f), reg_(levels.size()) {}
  int at(unsigned s) {
    auto& r = reg_[s - 1];
    if (!r) r = regularity(levels_[s - 1], f_);
    return *r;
  }

 private:
  const std::vector<MonomialIdeal>& levels_;
  Field f_;
  std::vector<std::optional<int>> reg_;
};

// ---- graph suites ---------------------------------------------------------

Checks suite_delta(const Context& ctx) {
  Checks out;
  const Graph& g = *ctx.inst.graph;
  const auto& c = ctx.inst.c;
  const unsigned d = delta(edge_ideal(g), c);
  const unsigned b = delta_edge_bmatching(g, c);
  add(out, "delta=bmatching", outcome_of(d == b), {{"delta", d}, {"bmatching", b}});
  if (c == BoundVector::ones(g.order())) {
    const auto m = matching_number(g);
    add(out, "delta=match", outcome_of(d == m), {{"delta", d}, {"match", m}});
  }
  return out;
}

Checks suite_edge_lq(const Context& ctx) {
  Checks out;
  const Graph& g = *ctx.inst.graph;
  if (!ctx.inst.c.all_positive()) {
    skip(out, "lq<=>cochordal", "bound vector has a zero component");
    return out;
  }
  const bool cochordal = is_chordal(complement(g));
  try {
    const bool lq = all_bounded_powers_lq(g, ctx.inst.c, ctx.cfg.max_gens);
    add(out, "lq<=>cochordal", outcome_of(lq == cochordal), {{"lq", lq}, {"cochordal", cochordal}});
  } catch (const CapExceeded& e) {
    skip(out, "lq<=>cochordal", e.what());
  }
  return out;
}

Checks suite_squarefree_lq(const Context& ctx) {
  Checks out;
  const Graph& g = *ctx.inst.graph;
  const MonomialIdeal ideal = edge_ideal(g);
  const bool cochordal = is_chordal(complement(g));
  const auto match = static_cast<unsigned>(matching_number(g));
  try {
    bool lq = true;
    for (unsigned s = 1; s <= match && lq; ++s)
      lq = find_lq_ordering(squarefree_power(ideal, s), ctx.cfg.max_gens).has_value();
    add(out, "squarefree-lq<=>cochordal", outcome_of(lq == cochordal),
        {{"lq", lq}, {"cochordal", cochordal}, {"match", match}});
  } catch (const CapExceeded& e) {
    skip(out, "squarefree-lq<=>cochordal", e.what());
  }
  return out;
}

Checks suite_essen(const Context& ctx) {
  Checks out;
  const Graph& g = *ctx.inst.graph;
  const auto& c = ctx.inst.c;
  auto levels = bounded_power_levels(edge_ideal(g), c);
  if (levels.empty()) {
    skip(out, "polymatroidal", "delta = 0");
    return out;
  }
  const MonomialIdeal& top = levels.back();
  const bool poly = is_polymatroidal(top);
  add(out, "polymatroidal", outcome_of(poly), {{"delta", levels.size()}, {"gens", top.size()}});
  if (c == BoundVector::ones(g.order()))
    add(out, "matroidal", outcome_of(is_matroidal(top)));
  if (poly) {
    try {
      add(out, "polymatroidal=>lq", outcome_of(find_lq_ordering(top, ctx.cfg.max_gens).has_value()));
    } catch (const CapExceeded& e) {
      skip(out, "polymatroidal=>lq", e.what());
    }
  }
  return out;
}

Checks suite_linres_top(const Context& ctx) {
  Checks out;
  const Graph& g = *ctx.inst.graph;
  auto levels = bounded_power_levels(edge_ideal(g), ctx.inst.c);
  if (levels.empty()) {
    skip(out, "linear-resolution", "delta = 0");
    return out;
  }
  const auto d = static_cast<int>(levels.size());
  const int reg = regularity(levels.back(), ctx.cfg.field);
  add(out, "linear-resolution", outcome_of(reg == 2 * d), {{"delta", d}, {"reg", reg}});
  return out;
}

// Runs `body(s)` for s in [first, last], honoring the configured cap.
template <class Body>
void over_levels(Checks& out, const SuiteConfig& cfg, const std::string& name, unsigned first,
                 unsigned last, unsigned delta_value, Body body) {
  if (first > last) {
    skip(out, name, "empty range for delta = " + std::to_string(delta_value));
    return;
  }
  const unsigned capped = cfg.max_s ? std::min(last, cfg.max_s) : last;
  for (unsigned s = first; s <= capped; ++s) body(s);
  if (capped < last) skip(out, name, "powers above max_s = " + std::to_string(cfg.max_s));
}

Checks suite_rfirst(const Context& ctx) {
  Checks out;
  const Graph& g = *ctx.inst.graph;
  auto levels = bounded_power_levels(edge_ideal(g), ctx.inst.c);
  const auto d = static_cast<unsigned>(levels.size());
  over_levels(out, ctx.cfg, "labeling", 1, d ? d - 1 : 0, d, [&](unsigned s) {
    const auto& level = levels[s - 1];
    Json detail{{"s", s}, {"gens", level.size()}};
    if (level.size() > std::min(ctx.cfg.max_gens, kMaxSearchCap)) {
      detail["reason"] = "generator cap " + std::to_string(ctx.cfg.max_gens);
      add(out, "labeling", Outcome::skipped, detail);
      return;
    }
    auto labeling = find_rfirst_labeling(level, levels[s], ctx.cfg.max_gens);
    const bool ok = labeling && is_rfirst_labeling(level, levels[s], *labeling);
    if (labeling) detail["labeling"] = *labeling;
    add(out, "labeling", outcome_of(ok), detail);
  });
  return out;
}

Checks suite_deg2(const Context& ctx) {
  Checks out;
  const Graph& g = *ctx.inst.graph;
  auto levels = bounded_power_levels(edge_ideal(g), ctx.inst.c);
  const auto d = static_cast<unsigned>(levels.size());
  over_levels(out, ctx.cfg, "quadratic-colon", 1, d ? d - 1 : 0, d, [&](unsigned s) {
    for (const auto& u : levels[s - 1].generators()) {
      MonomialIdeal q = colon(levels[s], u);
      const bool ok = std::all_of(q.generators().begin(), q.generators().end(),
                                  [](const Monomial& m) { return m.degree() == 2; });
      if (!ok) {
        add(out, "quadratic-colon", Outcome::fail, {{"s", s}, {"u", to_json(u)}, {"colon", to_json(q)}});
        return;
      }
    }
    add(out, "quadratic-colon", Outcome::pass, {{"s", s}, {"gens", levels[s - 1].size()}});
  });
  return out;
}

Checks suite_banerjee_colon(const Context& ctx) {
  constexpr std::size_t kFactorizationLimit = 6;
  Checks out;
  const Graph& g = *ctx.inst.graph;
  const auto& c = ctx.inst.c;
  auto levels = bounded_power_levels(edge_ideal(g), c);
  const auto d = static_cast<unsigned>(levels.size());
  over_levels(out, ctx.cfg, "colon=quadrics", 1, d ? d - 1 : 0, d, [&](unsigned s) {
    std::size_t multi = 0;
    for (const auto& u : levels[s - 1].generators()) {
      const MonomialIdeal direct = colon(levels[s], u);
      auto factorizations = edge_factorizations(g, u, s, kFactorizationLimit);
      if (factorizations.empty()) {
        add(out, "colon=quadrics", Outcome::fail, {{"s", s}, {"u", to_json(u)}, {"reason", "no edge factorization"}});
        return;
      }
      if (factorizations.size() > 1) ++multi;
      for (std::size_t f = 0; f < factorizations.size(); ++f) {
        const MonomialIdeal quadrics =
            detail::colon_quadrics_unchecked(g, c, u, factorizations[f]);
        if (quadrics != direct) {
          Json edges = Json::array();
          for (const auto& e : factorizations[f]) edges.push_back({e.first + 1, e.second + 1});
          add(out, "colon=quadrics", Outcome::fail,
              {{"s", s}, {"u", to_json(u)}, {"factorization", edges},
               {"direct", to_json(direct)}, {"quadrics", to_json(quadrics)}});
          return;
        }
      }
    }
    add(out, "colon=quadrics", Outcome::pass,
        {{"s", s}, {"gens", levels[s - 1].size()}, {"multiply_factored", multi}});
  });
  return out;
}

Checks suite_colon_reg(const Context& ctx) {
  Checks out;
  const Graph& g = *ctx.inst.graph;
  auto levels = bounded_power_levels(edge_ideal(g), ctx.inst.c);
  const auto d = static_cast<int>(levels.size());
  over_levels(out, ctx.cfg, "colon-reg", 2, static_cast<unsigned>(d), static_cast<unsigned>(d), [&](unsigned s) {
    const int bound = d - static_cast<int>(s) + 2;
    int worst = -1;
    std::size_t vanishing = 0;
    for (const auto& u : levels[s - 2].generators()) {
      MonomialIdeal q = colon(levels[s - 1], u);
      if (q.is_zero()) {
        ++vanishing;
        continue;
      }
      const int reg = regularity(q, ctx.cfg.field);
      worst = std::max(worst, reg);
      if (reg > bound) {
        add(out, "colon-reg", Outcome::fail,
            {{"s", s}, {"u", to_json(u)}, {"colon", to_json(q)}, {"reg", reg}, {"bound", bound}});
        return;
      }
    }
    add(out, "colon-reg", Outcome::pass,
        {{"s", s}, {"max_reg", worst}, {"bound", bound}, {"zero_colons", vanishing}});
  });
  return out;
}

Checks suite_regcol(const Context& ctx) {
  Checks out;
  const Graph& g = *ctx.inst.graph;
  auto levels = bounded_power_levels(edge_ideal(g), ctx.inst.c);
  const auto d = static_cast<unsigned>(levels.size());
  RegCache regs(levels, ctx.cfg.field);
  over_levels(out, ctx.cfg, "regcol", 1, d ? d - 1 : 0, d, [&](unsigned s) {
    int bound = regs.at(s);
    for (const auto& u : levels[s - 1].generators()) {
      MonomialIdeal q = colon(levels[s], u);
      if (!q.is_zero()) bound = std::max(bound, regularity(q, ctx.cfg.field) + 2 * static_cast<int>(s));
    }
    const int lhs = regs.at(s + 1);
    add(out, "regcol", outcome_of(lhs <= bound), {{"s", s}, {"reg_next", lhs}, {"bound", bound}});
  });
  return out;
}

Checks suite_regmain(const Context& ctx) {
  Checks out;
  const Graph& g = *ctx.inst.graph;
  auto levels = bounded_power_levels(edge_ideal(g), ctx.inst.c);
  const auto d = static_cast<unsigned>(levels.size());
  RegCache regs(levels, ctx.cfg.field);
  over_levels(out, ctx.cfg, "reg<=delta+s", 1, d, d, [&](unsigned s) {
    const int reg = regs.at(s);
    add(out, "reg<=delta+s", outcome_of(reg <= static_cast<int>(d + s)),
        {{"s", s}, {"reg", reg}, {"bound", d + s}});
  });
  if (d && top_level(ctx.cfg, d) == d) {
    const int reg = regs.at(d);
    add(out, "reg=2delta-at-top", outcome_of(reg == static_cast<int>(2 * d)), {{"delta", d}, {"reg", reg}});
  }
  return out;
}

// ---- ideal suites ---------------------------------------------------------

BoundVector sample_bound(std::mt19937_64& rng, std::size_t n, Exponent k) {
  std::vector<Exponent> c(n);
  for (auto& x : c) x = uniform<Exponent>(rng, 0, k);
  return BoundVector(std::move(c));
}

BoundVector sample_below(std::mt19937_64& rng, const BoundVector& c) {
  std::vector<Exponent> out(c.ambient());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = uniform<Exponent>(rng, 0, c[i]);
  return BoundVector(std::move(out));
}

constexpr int kBoundSamples = 3;

Checks suite_boston(const Context& ctx, std::size_t index) {
  Checks out;
  const MonomialIdeal& ideal = *ctx.inst.ideal;
  std::optional<LQOrdering> ordering;
  try {
    ordering = find_lq_ordering(ideal, ctx.cfg.max_gens);
  } catch (const CapExceeded& e) {
    skip(out, "inherited-ordering", e.what());
    return out;
  }
  if (!ordering) {
    skip(out, "inherited-ordering", "ideal has no linear quotients");
    return out;
  }
  auto rng = instance_rng(ctx.cfg.seed, index, kStreamSample);
  for (int k = 0; k < kBoundSamples; ++k) {
    BoundVector c = sample_bound(rng, ideal.ambient(), ctx.cfg.corpus.max_exponent);
    Json detail{{"c", to_json(c)}, {"order", ordering->order()}};
    try {
      auto induced = restrict_lq_ordering(*ordering, c);
      detail["induced"] = induced.order();
      add(out, "inherited-ordering", Outcome::pass, detail);
    } catch (const std::logic_error& e) {
      detail["error"] = e.what();
      add(out, "inherited-ordering", Outcome::fail, detail);
    }
  }
  return out;
}

Checks suite_istanbul(const Context& ctx, std::size_t index) {
  Checks out;
  const MonomialIdeal& ideal = *ctx.inst.ideal;
  auto rng = instance_rng(ctx.cfg.seed, index, kStreamSample);
  try {
    if (!find_lq_ordering(ideal, ctx.cfg.max_gens)) {
      skip(out, "lq-persists", "ideal has no linear quotients");
      return out;
    }
    for (int k = 0; k < kBoundSamples; ++k) {
      BoundVector c = sample_bound(rng, ideal.ambient(), ctx.cfg.corpus.max_exponent);
      const bool restricted = find_lq_ordering(restrict_to(ideal, c), ctx.cfg.max_gens).has_value();
      add(out, "lq-restricts", outcome_of(restricted), {{"c", to_json(c)}});
      if (!restricted) continue;
      for (int k2 = 0; k2 < kBoundSamples; ++k2) {
        BoundVector smaller = sample_below(rng, c);
        const bool ok = find_lq_ordering(restrict_to(ideal, smaller), ctx.cfg.max_gens).has_value();
        add(out, "lq-persists", outcome_of(ok), {{"c", to_json(c)}, {"c_prime", to_json(smaller)}});
      }
    }
  } catch (const CapExceeded& e) {
    skip(out, "lq-persists", e.what());
  }
  return out;
}

Checks suite_remark45(const Context& ctx) {
  Checks out;
  const MonomialIdeal& ideal = *ctx.inst.ideal;
  const unsigned d = delta(ideal, ctx.inst.c);
  add(out, "delta=1", outcome_of(d == 1), {{"delta", d}});
  const bool has_lq = find_lq_ordering(bounded_power(ideal, 1, ctx.inst.c), ctx.cfg.max_gens).has_value();
  add(out, "no-lq-ordering", outcome_of(!has_lq), {{"lq", has_lq}});
  add(out, "not-polymatroidal", outcome_of(!is_polymatroidal(ideal)));
  return out;
}

enum class SuiteKind { graph, ideal, fixed };

struct SuiteEntry {
  SuiteKind kind;
  std::function<Checks(const Context&, std::size_t)> body;
};

template <class F>
std::function<Checks(const Context&, std::size_t)> ignore_index(F f) {
  return [f](const Context& ctx, std::size_t) { return f(ctx); };
}

const std::map<std::string, SuiteEntry>& registry() {
  static const std::map<std::string, SuiteEntry> table{
      {"delta", {SuiteKind::graph, ignore_index(suite_delta)}},
      {"boston", {SuiteKind::ideal, suite_boston}},
      {"istanbul", {SuiteKind::ideal, suite_istanbul}},
      {"edge-lq", {SuiteKind::graph, ignore_index(suite_edge_lq)}},
      {"squarefree-lq", {SuiteKind::graph, ignore_index(suite_squarefree_lq)}},
      {"essen", {SuiteKind::graph, ignore_index(suite_essen)}},
      {"linres-top", {SuiteKind::graph, ignore_index(suite_linres_top)}},
      {"rfirst", {SuiteKind::graph, ignore_index(suite_rfirst)}},
      {"regcol", {SuiteKind::graph, ignore_index(suite_regcol)}},
      {"deg2", {SuiteKind::graph, ignore_index(suite_deg2)}},
      {"banerjee-colon", {SuiteKind::graph, ignore_index(suite_banerjee_colon)}},
      {"colon-reg", {SuiteKind::graph, ignore_index(suite_colon_reg)}},
      {"regmain", {SuiteKind::graph, ignore_index(suite_regmain)}},
      {"remark45", {SuiteKind::fixed, ignore_index(suite_remark45)}},
  };
  return table;
}

// ---- corpora --------------------------------------------------------------

Json graph_payload(const Graph& g, const BoundVector& c, const CPolicy& policy) {
  return {{"graph", to_json(g)}, {"graph6", to_graph6(g)}, {"c", to_json(c)}, {"c_policy", policy.to_string()}};
}

std::vector<Graph> graph_corpus(const SuiteConfig& cfg) {
  std::vector<Graph> graphs;
  const auto& cs = cfg.corpus;
  switch (cs.kind) {
    case CorpusSpec::Kind::enumerate:
      for (std::size_t n = std::max<std::size_t>(cs.nmin, 1); n <= cs.nmax; ++n)
        for (const auto& g : enumerate_labeled_graphs(n)) graphs.push_back(g);
      break;
    case CorpusSpec::Kind::graph6: {
      std::ifstream in(cs.path);
      if (!in) throw InputError("cannot open graph6 file " + cs.path);
      std::string line;
      std::size_t lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        try {
          graphs.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
          throw InputError(cs.path + ":" + std::to_string(lineno) + ": " + e.what());
        }
      }
      break;
    }
    case CorpusSpec::Kind::random:
      for (std::size_t k = 0; k < cs.count; ++k)
        graphs.push_back(random_graph(cfg.seed, k, std::max<std::size_t>(cs.nmin, 2), cs.nmax));
      break;
  }
  return graphs;
}

std::vector<Instance> build_instances(const SuiteConfig& cfg, SuiteKind kind) {
  std::vector<Instance> out;
  if (kind == SuiteKind::fixed) {
    MonomialIdeal ideal = MonomialIdeal::minimalize(5, {Monomial{1, 1, 1, 0, 0}, Monomial{1, 0, 0, 1, 1}});
    BoundVector c = BoundVector::ones(5);
    out.push_back({std::nullopt, ideal, c, {{"ideal", to_json(ideal)}, {"c", to_json(c)}}});
    return out;
  }
  if (kind == SuiteKind::ideal) {
    // Draw until `count` ideals with linear quotients are found; the other
    // draws stay in the report as skipped instances.
    const auto& cs = cfg.corpus;
    std::size_t hits = 0;
    for (std::size_t k = 0; hits < cs.count && k < 100 * cs.count + 100; ++k) {
      MonomialIdeal ideal = random_ideal(cfg.seed, k, cs.nmax, cs.ideal_gens, cs.max_exponent);
      try {
        if (find_lq_ordering(ideal, cfg.max_gens)) ++hits;
      } catch (const CapExceeded&) {
      }
      out.push_back({std::nullopt, ideal, BoundVector(), {{"ideal", to_json(ideal)}, {"draw", k}}});
    }
    return out;
  }
  auto graphs = graph_corpus(cfg);
  const bool squarefree_only = cfg.suite == "squarefree-lq";
  for (const auto& g : graphs) {
    if (squarefree_only) {
      BoundVector c = BoundVector::ones(g.order());
      out.push_back({g, std::nullopt, c, graph_payload(g, c, CPolicy{})});
      continue;
    }
    for (const auto& policy : cfg.c_policies) {
      BoundVector c = draw_bound(policy, g.order(), cfg.seed, out.size());
      out.push_back({g, std::nullopt, c, graph_payload(g, c, policy)});
    }
  }
  return out;
}

Outcome combine(const Checks& checks) {
  bool any_pass = false;
  for (const auto& c : checks) {
    if (c.outcome == Outcome::fail) return Outcome::fail;
    any_pass |= c.outcome == Outcome::pass;
  }
  return any_pass ? Outcome::pass : Outcome::skipped;
}

}  // namespace

CPolicy CPolicy::parse(const std::string& text) {
  CPolicy p;
  auto number = [&](const std::string& s) -> Exponent {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != s.size() || s.empty() || s[0] == '-')
      throw InputError("bad number '" + s + "' in c-policy '" + text + "'");
    return static_cast<Exponent>(v);
  };
  if (text == "ones") return p;
  auto colon_at = text.find(':');
  const std::string head = text.substr(0, colon_at);
  const std::string tail = colon_at == std::string::npos ? "" : text.substr(colon_at + 1);
  if (head == "const" && !tail.empty()) {
    p.kind = Kind::constant;
    p.k = number(tail);
  } else if (head == "random" && !tail.empty()) {
    p.kind = Kind::random;
    p.k = number(tail);
    if (p.k == 0) throw InputError("random c-policy needs k >= 1");
  } else if (head == "explicit" && !tail.empty()) {
    p.kind = Kind::fixed;
    std::stringstream ss(tail);
    std::string item;
    while (std::getline(ss, item, ',')) p.values.push_back(number(item));
  } else {
    throw InputError("unknown c-policy '" + text + "'");
  }
  return p;
}

std::string CPolicy::to_string() const {
  switch (kind) {
    case Kind::ones: return "ones";
    case Kind::constant: return "const:" + std::to_string(k);
    case Kind::random: return "random:" + std::to_string(k);
    case Kind::fixed: {
      std::string s = "explicit:";
      for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + std::to_string(values[i]);
      return s;
    }
  }
  return "?";
}

Json SuiteConfig::to_json() const {
  Json corpus_json;
  switch (corpus.kind) {
    case CorpusSpec::Kind::enumerate:
      corpus_json = {{"kind", "enumerate"}, {"nmin", corpus.nmin}, {"nmax", corpus.nmax}};
      break;
    case CorpusSpec::Kind::graph6:
      corpus_json = {{"kind", "graph6"}, {"path", corpus.path}};
      break;
    case CorpusSpec::Kind::random:
      corpus_json = {{"kind", "random"}, {"nmin", corpus.nmin}, {"nmax", corpus.nmax}, {"count", corpus.count}};
      break;
  }
  corpus_json["ideal_gens"] = corpus.ideal_gens;
  corpus_json["max_exponent"] = corpus.max_exponent;
  Json policies = Json::array();
  for (const auto& p : c_policies) policies.push_back(p.to_string());
  // `jobs` is deliberately absent: reports must not depend on it.
  return {{"suite", suite},       {"corpus", corpus_json}, {"c_policies", policies},
          {"char", field.characteristic()}, {"seed", seed}, {"max_gens", max_gens},
          {"max_s", max_s}};
}

void Tally::add(Outcome o) {
  switch (o) {
    case Outcome::pass: ++pass; break;
    case Outcome::fail: ++fail; break;
    case Outcome::skipped: ++skipped; break;
  }
}

Json VerificationReport::to_json(bool with_timings) const {
  Json recs = Json::array();
  Json counterexamples = Json::array();
  Json per_instance = Json::array();
  for (const auto& r : records) {
    Json checks_json = Json::array();
    for (const auto& c : r.checks) {
      checks_json.push_back({{"name", c.name}, {"outcome", std::string(bpow::to_string(c.outcome))}, {"detail", c.detail}});
      if (c.outcome == Outcome::fail)
        counterexamples.push_back({{"index", r.index}, {"instance", r.instance}, {"check", c.name}, {"detail", c.detail}});
    }
    recs.push_back({{"index", r.index},
                    {"instance", r.instance},
                    {"outcome", std::string(bpow::to_string(r.outcome))},
                    {"checks", checks_json}});
    per_instance.push_back({{"index", r.index}, {"ms", r.millis}});
  }
  auto tally_json = [](const Tally& t) { return Json{{"pass", t.pass}, {"fail", t.fail}, {"skipped", t.skipped}}; };
  Json out{{"config", config},
           {"records", recs},
           {"counterexamples", counterexamples},
           {"summary", {{"instances", records.size()}, {"outcomes", tally_json(instances)}, {"checks", tally_json(checks)}}}};
  if (with_timings) {
    double total = 0;
    for (const auto& r : records) total += r.millis;
    out["timings"] = {{"total_ms", total}, {"per_instance", per_instance}};
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, entry] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

BoundVector draw_bound(const CPolicy& policy, std::size_t n, std::uint64_t seed, std::size_t index) {
  switch (policy.kind) {
    case CPolicy::Kind::ones: return BoundVector::ones(n);
    case CPolicy::Kind::constant: return BoundVector::constant(n, policy.k);
    case CPolicy::Kind::fixed:
      if (policy.values.size() != n)
        throw InputError("explicit c-policy has length " + std::to_string(policy.values.size()) +
                         " but the graph has " + std::to_string(n) + " vertices");
      return BoundVector(policy.values);
    case CPolicy::Kind::random: {
      auto rng = instance_rng(seed, index, kStreamBound);
      while (true) {
        BoundVector c = sample_bound(rng, n, policy.k);
        if (c.total() > 0) return c;
      }
    }
  }
  throw std::logic_error("unreachable c-policy");
}

MonomialIdeal random_ideal(std::uint64_t seed, std::size_t index, std::size_t nmax,
                           std::size_t max_gens, Exponent max_exponent) {
  auto rng = instance_rng(seed, index, kStreamIdeal);
  const auto n = uniform<std::size_t>(rng, 1, std::max<std::size_t>(nmax, 1));
  const auto m = uniform<std::size_t>(rng, 1, std::max<std::size_t>(max_gens, 1));
  std::vector<Monomial> gens;
  while (gens.size() < m) {
    std::vector<Exponent> e(n);
    for (auto& x : e) x = uniform<Exponent>(rng, 0, max_exponent);
    Monomial u(std::move(e));
    if (!u.is_one()) gens.push_back(std::move(u));
    if (max_exponent == 0) break;
  }
  return MonomialIdeal::minimalize(n, std::move(gens));
}

Graph random_graph(std::uint64_t seed, std::size_t index, std::size_t nmin, std::size_t nmax) {
  auto rng = instance_rng(seed, index, kStreamGraph);
  const auto n = uniform<std::size_t>(rng, nmin, std::max(nmin, nmax));
  Graph g(n);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (uniform<int>(rng, 0, 1)) g.add_edge(i, j);
  return g;
}

VerificationReport run_suite(const SuiteConfig& cfg) {
  auto it = registry().find(cfg.suite);
  if (it == registry().end()) throw PreconditionError("unknown suite '" + cfg.suite + "'");
  if (cfg.max_gens == 0) throw PreconditionError("max_gens must be positive");
  const SuiteEntry& entry = it->second;
  const std::vector<Instance> instances = build_instances(cfg, entry.kind);

  VerificationReport report;
  report.config = cfg.to_json();
  report.records.resize(instances.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < instances.size(); k = next++) {
      const auto start = std::chrono::steady_clock::now();
      InstanceRecord rec;
      rec.index = k;
      rec.instance = instances[k].payload;
      rec.checks = entry.body(Context{cfg, instances[k]}, k);
      rec.outcome = combine(rec.checks);
      rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      report.records[k] = std::move(rec);
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(cfg.jobs, instances.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  for (const auto& r : report.records) {
    report.instances.add(r.outcome);
    for (const auto& c : r.checks) report.checks.add(c.outcome);
  }
  return report;
}

}  // namespace bpow
