#include "linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <utility>

namespace bpow::linalg {

namespace {

struct Overflow {};

struct Checked {
  std::int64_t v = 0;

  friend Checked operator*(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
    return {r};
  }
  friend Checked operator-(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
    return {r};
  }
  friend Checked operator/(Checked a, Checked b) { return {a.v / b.v}; }
  friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
  bool is_zero() const { return v == 0; }
  friend Checked gcd_of(Checked a, Checked b) { return {std::gcd(a.v, b.v)}; }
};

using Big = boost::multiprecision::cpp_int;

struct BigInt {
  Big v;
  friend BigInt operator*(const BigInt& a, const BigInt& b) { return {a.v * b.v}; }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return {a.v - b.v}; }
  friend BigInt operator/(const BigInt& a, const BigInt& b) { return {a.v / b.v}; }
  bool is_zero() const { return v.is_zero(); }
  friend BigInt gcd_of(const BigInt& a, const BigInt& b) {
    return {boost::multiprecision::gcd(a.v, b.v)};
  }
};

// Row echelon reduction; each updated row is divided by the gcd of its
// entries to keep coefficients small.
template <class T>
std::size_t eliminate(std::vector<std::vector<T>> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const auto& p = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      T g = gcd_of(p[col], rows[r][col]);
      T a = p[col] / g;
      T b = rows[r][col] / g;
      T content{};
      for (std::size_t k = col; k < cols; ++k) {
        rows[r][k] = rows[r][k] * a - p[k] * b;
        content = gcd_of(content, rows[r][k]);
      }
      if (!content.is_zero() && !(content.v == 1))
        for (std::size_t k = col; k < cols; ++k) rows[r][k] = rows[r][k] / content;
    }
    ++rank;
  }
  return rank;
}

template <class T>
std::vector<std::vector<T>> convert(const IntMatrix& m) {
  std::vector<std::vector<T>> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto x : m[i]) out[i].push_back(T{x});
  return out;
}

}  // namespace

std::size_t rank_rational(const IntMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  try {
    return eliminate(convert<Checked>(m), cols);
  } catch (const Overflow&) {
    return eliminate(convert<BigInt>(m), cols);
  }
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  const auto mod = static_cast<std::int64_t>(p);
  std::vector<std::vector<std::int64_t>> rows(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto x : m[i]) rows[i].push_back(((x % mod) + mod) % mod);

  auto inverse = [&](std::int64_t a) {
    std::int64_t result = 1, e = mod - 2;
    while (e) {
      if (e & 1) result = result * a % mod;
      a = a * a % mod;
      e >>= 1;
    }
    return result;
  };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::int64_t inv = inverse(rows[rank][col]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const std::int64_t f = rows[r][col] * inv % mod;
      for (std::size_t k = col; k < cols; ++k)
        rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % mod + mod) % mod;
    }
    ++rank;
  }
  return rank;
}

}  // namespace bpow::linalg
