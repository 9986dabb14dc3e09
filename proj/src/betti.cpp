#include "frob/betti.hpp"

#include <sstream>
#include <stdexcept>

namespace frob {

BettiVector BettiVector::delta(std::size_t i) {
  BettiVector b;
  b.coef_.assign(i + 1, 0);
  b.coef_[i] = 1;
  return b;
}

std::uint64_t BettiVector::operator[](std::size_t i) const {
  return i < coef_.size() ? coef_[i] : 0;
}

void BettiVector::add_at(std::size_t i, std::uint64_t value) {
  if (value == 0) return;
  if (i >= coef_.size()) coef_.resize(i + 1, 0);
  coef_[i] += value;
}

BettiVector& BettiVector::operator+=(const BettiVector& other) {
  if (other.coef_.size() > coef_.size()) coef_.resize(other.coef_.size(), 0);
  for (std::size_t i = 0; i < other.coef_.size(); ++i) coef_[i] += other.coef_[i];
  trim();
  return *this;
}

BettiVector BettiVector::shifted(std::size_t by) const {
  BettiVector out;
  if (coef_.empty()) return out;
  out.coef_.assign(coef_.size() + by, 0);
  for (std::size_t i = 0; i < coef_.size(); ++i) out.coef_[i + by] = coef_[i];
  return out;
}

BettiVector BettiVector::down_shifted(std::size_t by) const {
  BettiVector out;
  for (std::size_t i = 0; i < by && i < coef_.size(); ++i)
    if (coef_[i] != 0)
      throw std::logic_error("down_shifted would drop a nonzero Betti entry");
  if (coef_.size() <= by) return out;
  out.coef_.assign(coef_.begin() + static_cast<std::ptrdiff_t>(by), coef_.end());
  out.trim();
  return out;
}

std::map<std::size_t, std::uint64_t> BettiVector::nonzero_entries() const {
  std::map<std::size_t, std::uint64_t> out;
  for (std::size_t i = 0; i < coef_.size(); ++i)
    if (coef_[i] != 0) out[i] = coef_[i];
  return out;
}

std::string BettiVector::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, v] : nonzero_entries()) {
    if (!first) os << " ";
    os << "b" << i << "=" << v;
    first = false;
  }
  return os.str();
}

void BettiVector::trim() {
  while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

BettiVector convolve(const BettiVector& a, const BettiVector& b) {
  BettiVector out;
  for (std::size_t i = 0; i < a.support_end(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.support_end(); ++j)
      out.add_at(i + j, a[i] * b[j]);
  }
  return out;
}

BettiVector join_product(const BettiVector& a, const BettiVector& b) {
  return convolve(a, b).down_shifted(1);
}

}  // namespace frob
