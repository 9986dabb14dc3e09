#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frob/element.hpp"
#include "frob/poset.hpp"

namespace frob {

/// Open interval (0, lambda) under the Frobenius order together with its
/// elements, index-aligned with the poset.
struct OpenInterval {
  std::vector<Element> elements;
  FinitePoset order;
};

/// An affine monoid in one of three presentations: free of finite rank, a
/// finitely generated submonoid of N^d, or the gluing of two affine monoids
/// along reducible elements (the quotient of the direct sum identifying
/// rho1 with rho2).
///
/// Elements are canonical forms (see Element); all operations are pure up to
/// internal memo tables, which are mutex-guarded, so values can be shared
/// freely across threads.
class Monoid {
 public:
  enum class Kind { free, submonoid, glued };

  static Monoid free_monoid(std::int64_t rank);
  static Monoid submonoid(std::int64_t ambient_rank, std::vector<std::vector<std::int64_t>> generators);
  /// Requires rho1, rho2 reducible in their factors.
  static Monoid glued(const Monoid& left, const Monoid& right, const Element& rho1,
                      const Element& rho2);
  /// Adjoin a formal r-th part of the reducible element rho: glue with a free
  /// factor along r times its generator.  Requires r >= 2.
  Monoid adjoin_root(const Element& rho, std::int64_t r) const;
  /// Direct sum of two vector-presented monoids, modeled in N^(d1+d2).
  static Monoid direct_sum(const Monoid& a, const Monoid& b);

  Kind kind() const;
  std::int64_t rank() const;                 // free
  std::int64_t ambient_rank() const;         // submonoid
  const Monoid& left() const;                // glued
  const Monoid& right() const;               // glued
  const Element& rho1() const;               // glued
  const Element& rho2() const;               // glued
  Element rho() const;                       // glued: the identified class

  Element zero() const;
  /// Canonical generator elements, deduplicated, in a fixed order.
  const std::vector<Element>& generators() const;

  /// Degree: additive, zero only at zero.  Vector kinds use the coordinate
  /// sum; a gluing combines factor degrees with cross weights so that both
  /// copies of rho agree, hence the grading descends to the quotient.
  std::int64_t degree(const Element& e) const;

  Element add(const Element& a, const Element& b) const;
  Element scale(std::int64_t k, const Element& e) const;

  /// Frobenius divisibility: true iff b - a exists in the monoid.  Memoized
  /// generator ascent from a.
  bool divides(const Element& a, const Element& b) const;

  /// The unique difference b - a, or nullopt if a does not divide b.
  std::optional<Element> subtract(const Element& b, const Element& a) const;

  /// Largest l with l*rho <= x, and the remainder x - l*rho (never >= rho).
  std::pair<std::int64_t, Element> max_multiple(const Element& x, const Element& rho) const;

  /// All elements of degree <= bound, sorted by (degree, canonical form).
  std::vector<Element> elements_up_to(std::int64_t bound) const;

  /// Elements strictly between 0 and lam in the Frobenius order.
  OpenInterval open_interval(const Element& lam) const;

  bool is_reducible(const Element& rho) const;

  /// Canonicalize a raw pair (x1, x2) of factor elements (glued kind only).
  Element from_pair(const Element& x1, const Element& x2) const;

  bool is_valid(const Element& e) const;
  /// Throws std::invalid_argument with a specific message if e is not a
  /// canonical element of this monoid.
  void validate(const Element& e) const;

  std::string describe() const;

 private:
  struct Impl;
  explicit Monoid(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace frob
