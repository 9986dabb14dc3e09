#include "frob/exact_rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace frob {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

// One Bareiss update step a[i][j] <- (piv*a[i][j] - a[i][c]*a[r][j]) / prev,
// computed in 128 bits with an overflow check on the (exact) quotient.
std::int64_t bareiss_step_i64(std::int64_t piv, std::int64_t aij, std::int64_t aic,
                              std::int64_t arj, std::int64_t prev) {
  __int128 t = static_cast<__int128>(piv) * aij - static_cast<__int128>(aic) * arj;
  __int128 q = t / prev;
  if (q > std::numeric_limits<std::int64_t>::max() ||
      q < std::numeric_limits<std::int64_t>::min())
    throw Overflow{};
  return static_cast<std::int64_t>(q);
}

template <typename T>
T bareiss_step(const T& piv, const T& aij, const T& aic, const T& arj, const T& prev) {
  return (piv * aij - aic * arj) / prev;
}

template <typename T, typename Step>
std::size_t bareiss_rank(std::vector<std::vector<T>>& a, Step step) {
  using std::abs;
  if (a.empty() || a[0].empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  T prev = T(1);
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // pick the nonzero pivot of smallest magnitude to damp coefficient growth
    std::size_t pr = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      if (pr == rows || abs(a[i][c]) < abs(a[pr][c])) pr = i;
    }
    if (pr == rows) continue;
    if (pr != r) std::swap(a[pr], a[r]);
    const T piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i][j] = step(piv, a[i][j], a[i][c], a[r][j], prev);
      a[i][c] = T(0);
    }
    prev = piv;
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank_over_rationals(const IntMatrix& m) {
  if (m.empty() || m[0].empty()) return 0;
  try {
    std::vector<std::vector<std::int64_t>> a(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) a[i].assign(m[i].begin(), m[i].end());
    return bareiss_rank(a, [](std::int64_t piv, std::int64_t aij, std::int64_t aic,
                              std::int64_t arj, std::int64_t prev) {
      return bareiss_step_i64(piv, aij, aic, arj, prev);
    });
  } catch (const Overflow&) {
    std::vector<std::vector<BigInt>> a(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) a[i].assign(m[i].begin(), m[i].end());
    return bareiss_rank(a, [](const BigInt& piv, const BigInt& aij, const BigInt& aic,
                              const BigInt& arj, const BigInt& prev) {
      return bareiss_step(piv, aij, aic, arj, prev);
    });
  }
}

std::size_t rank_over_prime_field(const IntMatrix& m, std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("rank_over_prime_field: modulus not prime");
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  const std::uint64_t mod = p;
  std::vector<std::vector<std::uint32_t>> a(rows, std::vector<std::uint32_t>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::int64_t v = m[i][j] % static_cast<std::int64_t>(mod);
      if (v < 0) v += static_cast<std::int64_t>(mod);
      a[i][j] = static_cast<std::uint32_t>(v);
    }
  auto inv = [&](std::uint64_t x) {
    // Fermat: x^(p-2) mod p
    std::uint64_t e = mod - 2, acc = 1, base = x % mod;
    while (e) {
      if (e & 1) acc = acc * base % mod;
      base = base * base % mod;
      e >>= 1;
    }
    return acc;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a[i][c] != 0) { pr = i; break; }
    if (pr == rows) continue;
    std::swap(a[pr], a[r]);
    const std::uint64_t pivinv = inv(a[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t f = a[i][c] * pivinv % mod;
      a[i][c] = 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        std::uint64_t v = a[i][j] + (mod - f * a[r][j] % mod);
        a[i][j] = static_cast<std::uint32_t>(v % mod);
      }
    }
    ++r;
  }
  return r;
}

std::size_t matrix_rank(const IntMatrix& m, const FieldChoice& field) {
  return field.is_rationals() ? rank_over_rationals(m)
                              : rank_over_prime_field(m, field.prime());
}

}  // namespace frob
