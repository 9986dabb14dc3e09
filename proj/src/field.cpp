#include "frob/field.hpp"

#include <stdexcept>

namespace frob {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldChoice FieldChoice::prime_field(std::uint32_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("prime_field: " + std::to_string(p) + " is not prime");
  return FieldChoice(p);
}

std::string FieldChoice::to_string() const {
  return is_rationals() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

}  // namespace frob
