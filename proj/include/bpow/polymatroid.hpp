#pragma once

#include <cstddef>
#include <optional>

#include "bpow/graph.hpp"
#include "bpow/monomial.hpp"
#include "bpow/outcome.hpp"

namespace bpow {

/// All generators share one total degree. The zero ideal counts as equigenerated.
bool is_equigenerated(const MonomialIdeal& ideal);

/// Smallest j with deg_{x_j}(u) < deg_{x_j}(v) and x_j u / x_i in G(I),
/// where u = G(I)[u_idx], v = G(I)[v_idx]. Requires deg_{x_i}(u) > deg_{x_i}(v).
std::optional<std::size_t> exchange_witness(const MonomialIdeal& ideal, std::size_t u_idx,
                                            std::size_t v_idx, std::size_t i);

bool is_polymatroidal(const MonomialIdeal& ideal);
/// Polymatroidal with squarefree generators.
bool is_matroidal(const MonomialIdeal& ideal);

/// Checks that the top nonvanishing bounded power (I(G)^delta)_c is
/// polymatroidal; skipped when delta_c(I(G)) = 0.
Outcome verify_essen(const Graph& g, const BoundVector& c);

}  // namespace bpow
