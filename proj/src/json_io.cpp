#include "bpow/json_io.hpp"

namespace bpow {

namespace {

std::vector<Exponent> exponent_list(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  if (j.size() != n)
    throw InputError(std::string(what) + " must have length " + std::to_string(n));
  std::vector<Exponent> out;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0)
      throw InputError(std::string(what) + " entries must be nonnegative integers");
    out.push_back(x.get<Exponent>());
  }
  return out;
}

std::size_t ambient_of(const Json& j, bool allow_zero = false) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw InputError("expected an object with integer field \"n\"");
  auto n = j["n"].get<long long>();
  if (n < (allow_zero ? 0 : 1)) throw InputError("\"n\" must be positive");
  return static_cast<std::size_t>(n);
}

}  // namespace

Json to_json(const Monomial& u) { return Json(std::vector<Exponent>(u.exponents().begin(), u.exponents().end())); }

Json to_json(const BoundVector& c) { return Json(std::vector<Exponent>(c.entries().begin(), c.entries().end())); }

Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_json(g));
  return {{"n", ideal.ambient()}, {"gens", gens}};
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.first + 1, e.second + 1});
  return {{"n", g.order()}, {"edges", edges}};
}

Json to_json(const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& [key, beta] : table.entries()) entries.push_back({key.first, key.second, beta});
  return {{"char", table.field().characteristic()}, {"entries", entries}};
}

Monomial monomial_from_json(const Json& j, std::size_t n) {
  return Monomial(exponent_list(j, n, "monomial"));
}

BoundVector bound_from_json(const Json& j, std::size_t n) {
  return BoundVector(exponent_list(j, n, "bound vector"));
}

MonomialIdeal ideal_from_json(const Json& j) {
  const std::size_t n = ambient_of(j, true);
  if (!j.contains("gens") || !j["gens"].is_array()) throw InputError("ideal needs a \"gens\" array");
  std::vector<Monomial> gens;
  for (const auto& g : j["gens"]) gens.push_back(monomial_from_json(g, n));
  return MonomialIdeal::minimalize(n, std::move(gens));
}

Graph graph_from_json(const Json& j) {
  const std::size_t n = ambient_of(j);
  if (n > 64) throw InputError("graphs are limited to 64 vertices");
  if (!j.contains("edges") || !j["edges"].is_array()) throw InputError("graph needs an \"edges\" array");
  Graph g(n);
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw InputError("edges must be pairs of vertex labels");
    auto a = e[0].get<long long>(), b = e[1].get<long long>();
    if (a < 1 || b < 1 || a > static_cast<long long>(n) || b > static_cast<long long>(n))
      throw InputError("edge endpoint outside 1..n");
    if (a == b) throw InputError("loops are not allowed");
    g.add_edge(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
  }
  return g;
}

BettiTable betti_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("char") || !j.contains("entries"))
    throw InputError("Betti table needs \"char\" and \"entries\"");
  BettiTable table(Field(j["char"].get<std::uint32_t>()));
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 3) throw InputError("Betti entries are [i, j, beta]");
    table.add(e[0].get<int>(), e[1].get<int>(), e[2].get<std::uint64_t>());
  }
  return table;
}

}  // namespace bpow
