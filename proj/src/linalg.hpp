#pragma once

// Exact ranks of small integer matrices.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bpow::linalg {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Rank over Q. Fraction-free elimination in checked 64-bit arithmetic,
/// repeated with arbitrary-precision integers if an intermediate overflows.
std::size_t rank_rational(const IntMatrix& m);

/// Rank over GF(p), p prime.
std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p);

}  // namespace bpow::linalg
