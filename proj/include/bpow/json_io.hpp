#pragma once

// JSON forms of the core values. Indices are 1-based in every serialized form.
//   ideal:      {"n": int, "gens": [[int, ...], ...]}   (canonical order)
//   graph:      {"n": int, "edges": [[i, j], ...]}
//   betti:      {"char": int, "entries": [[i, j, beta], ...]} sorted by (i, j)

#include <json.hpp>

#include "bpow/graph.hpp"
#include "bpow/homology.hpp"
#include "bpow/monomial.hpp"

namespace bpow {

using Json = nlohmann::json;

/// Thrown for JSON that does not describe a valid value.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json to_json(const Monomial& u);
Json to_json(const BoundVector& c);
Json to_json(const MonomialIdeal& ideal);
Json to_json(const Graph& g);
Json to_json(const BettiTable& table);

Monomial monomial_from_json(const Json& j, std::size_t n);
BoundVector bound_from_json(const Json& j, std::size_t n);
MonomialIdeal ideal_from_json(const Json& j);
Graph graph_from_json(const Json& j);
BettiTable betti_from_json(const Json& j);

}  // namespace bpow
