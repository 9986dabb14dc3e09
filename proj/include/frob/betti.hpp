#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace frob {

/// Tor-graded vector of reduced Betti numbers: entry i holds the reduced
/// Betti number in simplicial degree i - 2, so the formal S^{-2} is the
/// unit vector at index 0 and the empty complex S^{-1} is the unit vector
/// at index 1.  Trailing zeros are not stored.
class BettiVector {
 public:
  BettiVector() = default;

  /// Unit vector at Tor index i.
  static BettiVector delta(std::size_t i);

  std::uint64_t operator[](std::size_t i) const;
  void add_at(std::size_t i, std::uint64_t value);

  bool is_zero() const { return coef_.empty(); }
  /// One past the largest nonzero index (0 for the zero vector).
  std::size_t support_end() const { return coef_.size(); }

  bool operator==(const BettiVector& other) const { return coef_ == other.coef_; }
  bool operator!=(const BettiVector& other) const { return !(*this == other); }

  BettiVector& operator+=(const BettiVector& other);

  /// Index-shift upward: (shifted(s))[i + s] = (*this)[i].  With s = 2l this
  /// is convolution with the Betti vector of the (2l-2)-sphere.
  BettiVector shifted(std::size_t by) const;

  /// Index-shift downward; the dropped low entries must be zero.
  BettiVector down_shifted(std::size_t by) const;

  std::map<std::size_t, std::uint64_t> nonzero_entries() const;
  std::string to_string() const;  // e.g. "b2=1" or "0"

 private:
  void trim();
  std::vector<std::uint64_t> coef_;
};

/// (a * b)_i = sum_{j+k=i} a_j b_k.  This is the Betti vector of the
/// suspended join X <> Y in Tor grading; delta(0) is the identity.
BettiVector convolve(const BettiVector& a, const BettiVector& b);

/// Tor-graded Betti vector of the plain join X * Y over a field:
/// convolve followed by a downward shift of one.  delta(1) (the empty
/// complex) is the identity.
BettiVector join_product(const BettiVector& a, const BettiVector& b);

}  // namespace frob
