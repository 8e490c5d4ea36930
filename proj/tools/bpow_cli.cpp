#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "bpow/bounded_powers.hpp"
#include "bpow/colon_structure.hpp"
#include "bpow/harness.hpp"
#include "bpow/json_io.hpp"
#include "bpow/linear_quotients.hpp"
#include "bpow/polymatroid.hpp"

namespace {

using namespace bpow;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

// The input document: a bare ideal or graph, or an object holding "ideal" or
// "graph" next to optional "c", "s" and "u" fields (as in report payloads).
struct Input {
  Json doc = Json::object();
  std::optional<Graph> graph;
  std::optional<MonomialIdeal> ideal;

  std::size_t ambient() const { return graph ? graph->order() : ideal->ambient(); }
  MonomialIdeal as_ideal() const { return graph ? edge_ideal(*graph) : *ideal; }
  const Graph& require_graph() const {
    if (!graph) throw InputError("this command needs a graph");
    return *graph;
  }
  const MonomialIdeal& require_ideal() const {
    if (!ideal) throw InputError("this command needs an ideal");
    return *ideal;
  }
};

Input read_input(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) throw InputError("empty input");
  Input input;
  if (text[start] != '{') {
    auto end = text.find_last_not_of(" \t\r\n");
    std::string line = text.substr(start, end - start + 1);
    if (line.find('\n') != std::string::npos) throw InputError("expected a single graph6 line");
    input.graph = parse_graph6(line);
    return input;
  }
  try {
    input.doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  const Json& d = input.doc;
  if (d.contains("graph")) {
    input.graph = d["graph"].is_string() ? parse_graph6(d["graph"].get<std::string>()) : graph_from_json(d["graph"]);
  } else if (d.contains("ideal")) {
    input.ideal = ideal_from_json(d["ideal"]);
  } else if (d.contains("edges")) {
    input.graph = graph_from_json(d);
  } else if (d.contains("gens")) {
    input.ideal = ideal_from_json(d);
  } else {
    throw InputError("input holds neither an ideal nor a graph");
  }
  return input;
}

std::vector<Exponent> parse_list(const std::string& text, const char* what) {
  std::vector<Exponent> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
    }
    if (v < 0 || used != item.size()) throw InputError(std::string("bad entry '") + item + "' in " + what);
    out.push_back(static_cast<Exponent>(v));
  }
  return out;
}

// Command-line value wins over the document field of the same name.
std::optional<Json> field(const Input& in, const std::string& cli, const char* key) {
  if (!cli.empty()) {
    Json arr = Json::array();
    for (auto v : parse_list(cli, key)) arr.push_back(v);
    return arr;
  }
  if (in.doc.contains(key)) return in.doc[key];
  return std::nullopt;
}

BoundVector bound_of(const Input& in, const std::string& cli) {
  auto j = field(in, cli, "c");
  return j ? bound_from_json(*j, in.ambient()) : BoundVector::ones(in.ambient());
}

std::optional<BoundVector> optional_bound(const Input& in, const std::string& cli) {
  auto j = field(in, cli, "c");
  if (!j) return std::nullopt;
  return bound_from_json(*j, in.ambient());
}

Monomial monomial_of(const Input& in, const std::string& cli) {
  auto j = field(in, cli, "u");
  if (!j) throw InputError("missing monomial (--u)");
  return monomial_from_json(*j, in.ambient());
}

unsigned power_of(const Input& in, unsigned cli) {
  if (cli) return cli;
  if (in.doc.contains("s") && in.doc["s"].is_number_unsigned() && in.doc["s"].get<unsigned>() > 0)
    return in.doc["s"].get<unsigned>();
  throw InputError("missing positive power (--s)");
}

Json order_json(const std::vector<std::size_t>& order) {
  Json arr = Json::array();
  for (auto k : order) arr.push_back(k + 1);
  return arr;
}

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw InputError("cannot write " + out);
  f << j.dump(2) << '\n';
}

std::size_t default_jobs() {
  if (const char* env = std::getenv("BPOW_JOBS")) {
    try {
      auto v = std::stoul(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded powers of edge ideals: computations and theorem suites"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string in_path, out_path, c_text, u_text, order_text;
  unsigned s_value = 0, characteristic = 0;
  std::size_t cap = kDefaultSearchCap;
  app.add_option("--in", in_path, "Input file (default: standard input)");
  app.add_option("--out", out_path, "Output file (default: standard output)");

  auto with_c = [&](CLI::App* cmd) { cmd->add_option("--c", c_text, "Bound vector, comma separated"); };
  auto with_char = [&](CLI::App* cmd) { cmd->add_option("--char", characteristic, "Field characteristic (0 or a prime)"); };

  auto* ideal_cmd = app.add_subcommand("ideal", "Operations on a monomial ideal");
  ideal_cmd->require_subcommand(1);
  auto* restrict_cmd = ideal_cmd->add_subcommand("restrict", "Keep the c-bounded generators");
  with_c(restrict_cmd);
  auto* power_cmd = ideal_cmd->add_subcommand("power", "s-th power, c-bounded when --c is given");
  power_cmd->add_option("--s", s_value, "Exponent");
  with_c(power_cmd);
  auto* colon_cmd = ideal_cmd->add_subcommand("colon", "Colon ideal (I : u)");
  colon_cmd->add_option("--u", u_text, "Exponent vector of u, comma separated");
  auto* betti_cmd = ideal_cmd->add_subcommand("betti", "Graded Betti numbers");
  with_char(betti_cmd);
  auto* reg_cmd = ideal_cmd->add_subcommand("reg", "Castelnuovo-Mumford regularity");
  with_char(reg_cmd);

  auto* graph_cmd = app.add_subcommand("graph", "Operations on a graph");
  graph_cmd->require_subcommand(1);
  auto* complement_cmd = graph_cmd->add_subcommand("complement", "Complement graph");
  auto* chordal_cmd = graph_cmd->add_subcommand("chordal", "Chordality test");
  auto* match_cmd = graph_cmd->add_subcommand("match", "Matching number");

  auto* delta_cmd = app.add_subcommand("delta", "Largest s with a nonzero c-bounded s-th power");
  with_c(delta_cmd);

  auto* lq_cmd = app.add_subcommand("lq", "Linear quotient orderings");
  lq_cmd->require_subcommand(1);
  auto* lq_find_cmd = lq_cmd->add_subcommand("find", "Search for an ordering with linear quotients");
  lq_find_cmd->add_option("--cap", cap, "Largest generator count to search")->check(CLI::Range(std::size_t{1}, kMaxSearchCap));
  auto* lq_check_cmd = lq_cmd->add_subcommand("check", "Check a given ordering");
  lq_check_cmd->add_option("--order", order_text, "1-based generator positions, comma separated")->required();

  auto* poly_cmd = app.add_subcommand("polymatroidal", "Polymatroidal and matroidal tests");

  auto* quadrics_cmd = app.add_subcommand("colon-quadrics", "Quadratic generators of the next bounded power colon u");
  quadrics_cmd->add_option("--s", s_value, "Power of u");
  quadrics_cmd->add_option("--u", u_text, "Exponent vector of u, comma separated");
  with_c(quadrics_cmd);

  SuiteConfig cfg;
  std::string graph6_path, suite_help;
  std::vector<std::string> policies;
  std::optional<std::size_t> random_count;
  std::optional<std::size_t> jobs;
  bool no_timings = false;
  for (const auto& name : suite_names()) suite_help += (suite_help.empty() ? "" : ", ") + name;
  auto* verify_cmd = app.add_subcommand("verify", "Run a theorem suite over a corpus");
  verify_cmd->add_option("--suite", cfg.suite, "One of: " + suite_help)->required()->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--nmin", cfg.corpus.nmin, "Smallest vertex count");
  verify_cmd->add_option("--nmax", cfg.corpus.nmax, "Largest vertex (or variable) count");
  verify_cmd->add_option("--graph6", graph6_path, "Corpus file with one graph6 line per graph");
  verify_cmd->add_option("--random", random_count, "Random graph corpus of this size");
  verify_cmd->add_option("--count", cfg.corpus.count, "Ideals with linear quotients to collect (ideal suites)");
  verify_cmd->add_option("--ideal-gens", cfg.corpus.ideal_gens, "Generator count bound for random ideals");
  verify_cmd->add_option("--max-exponent", cfg.corpus.max_exponent, "Exponent bound for random ideals and bounds");
  verify_cmd->add_option("--c-policy", policies, "ones | const:K | random:K | explicit:c1,c2,... (repeatable)");
  verify_cmd->add_option("--char", characteristic, "Field characteristic (0 or a prime)");
  verify_cmd->add_option("--seed", cfg.seed, "Random seed");
  verify_cmd->add_option("--jobs", jobs, "Worker threads (default: $BPOW_JOBS or 1)");
  verify_cmd->add_option("--max-gens", cfg.max_gens, "Cap for ordering searches")->check(CLI::Range(std::size_t{1}, kMaxSearchCap));
  verify_cmd->add_option("--max-s", cfg.max_s, "Largest power examined (0: no cap)");
  verify_cmd->add_flag("--no-timings", no_timings, "Omit the timings section");
  verify_cmd->excludes(app.get_option("--in"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify_cmd->parsed()) {
      if (!graph6_path.empty() && random_count)
        throw InputError("--graph6 and --random are mutually exclusive");
      if (!graph6_path.empty()) {
        cfg.corpus.kind = CorpusSpec::Kind::graph6;
        cfg.corpus.path = graph6_path;
      } else if (random_count) {
        cfg.corpus.kind = CorpusSpec::Kind::random;
        cfg.corpus.count = *random_count;
      }
      if (!policies.empty()) {
        cfg.c_policies.clear();
        for (const auto& p : policies) cfg.c_policies.push_back(CPolicy::parse(p));
      }
      cfg.field = Field(characteristic);
      cfg.jobs = jobs.value_or(default_jobs());
      const VerificationReport report = run_suite(cfg);
      emit(report.to_json(!no_timings), out_path);
      std::cerr << cfg.suite << ": " << report.records.size() << " instances, " << report.instances.pass
                << " pass, " << report.instances.fail << " fail, " << report.instances.skipped << " skipped\n";
      return report.all_passed() ? kExitOk : kExitCounterexample;
    }

    const Input input = read_input(in_path);
    Json result;
    if (restrict_cmd->parsed()) {
      result = to_json(restrict_to(input.require_ideal(), bound_of(input, c_text)));
    } else if (power_cmd->parsed()) {
      const unsigned s = power_of(input, s_value);
      auto c = optional_bound(input, c_text);
      result = to_json(c ? bounded_power(input.require_ideal(), s, *c) : power(input.require_ideal(), s));
    } else if (colon_cmd->parsed()) {
      result = to_json(colon(input.require_ideal(), monomial_of(input, u_text)));
    } else if (betti_cmd->parsed()) {
      result = to_json(betti_table(input.as_ideal(), Field(characteristic)));
    } else if (reg_cmd->parsed()) {
      result = regularity(input.as_ideal(), Field(characteristic));
    } else if (complement_cmd->parsed()) {
      result = to_json(complement(input.require_graph()));
    } else if (chordal_cmd->parsed()) {
      result = is_chordal(input.require_graph());
    } else if (match_cmd->parsed()) {
      result = matching_number(input.require_graph());
    } else if (delta_cmd->parsed()) {
      result = delta(input.as_ideal(), bound_of(input, c_text));
    } else if (lq_find_cmd->parsed()) {
      auto ordering = find_lq_ordering(input.as_ideal(), cap);
      result = ordering ? order_json(ordering->order()) : Json(nullptr);
    } else if (lq_check_cmd->parsed()) {
      std::vector<std::size_t> order;
      for (auto k : parse_list(order_text, "order")) {
        if (k == 0) throw InputError("order positions are 1-based");
        order.push_back(k - 1);
      }
      result = is_lq_ordering(input.as_ideal(), order);
    } else if (poly_cmd->parsed()) {
      const MonomialIdeal ideal = input.as_ideal();
      result = {{"polymatroidal", is_polymatroidal(ideal)}, {"matroidal", is_matroidal(ideal)}};
    } else if (quadrics_cmd->parsed()) {
      const Graph& g = input.require_graph();
      result = to_json(colon_quadrics(g, power_of(input, s_value), bound_of(input, c_text), monomial_of(input, u_text)));
    }
    emit(result, out_path);
    return kExitOk;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
