#pragma once

#include <cstdint>
#include <string>

namespace frob {

/// Coefficient field for homology: exact rationals or GF(p).
class FieldChoice {
 public:
  static FieldChoice rationals() { return FieldChoice(0); }
  /// Throws std::invalid_argument unless p is prime.
  static FieldChoice prime_field(std::uint32_t p);

  bool is_rationals() const { return p_ == 0; }
  std::uint32_t prime() const { return p_; }

  bool operator==(const FieldChoice& o) const { return p_ == o.p_; }
  bool operator!=(const FieldChoice& o) const { return p_ != o.p_; }

  std::string to_string() const;  // "Q" or "GF(p)"

 private:
  explicit FieldChoice(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

}  // namespace frob
