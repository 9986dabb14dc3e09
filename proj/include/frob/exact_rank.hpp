#pragma once

#include <cstdint>
#include <vector>

#include "frob/field.hpp"

namespace frob {

/// Dense integer matrix as a row list; rows may be empty (zero columns).
using IntMatrix = std::vector<std::vector<std::int32_t>>;

/// Exact rank over the rationals.  Fraction-free (Bareiss) elimination on a
/// 64-bit fast path, escalating to arbitrary precision if a minor overflows.
std::size_t rank_over_rationals(const IntMatrix& m);

/// Rank over GF(p), p prime.
std::size_t rank_over_prime_field(const IntMatrix& m, std::uint32_t p);

std::size_t matrix_rank(const IntMatrix& m, const FieldChoice& field);

}  // namespace frob
