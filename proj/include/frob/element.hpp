#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace frob {

/// Canonical-form element of an affine monoid.  Two shapes:
///   - vector form: exponent/ambient vector over N (free and submonoid kinds)
///   - glued form: triple (n, hat1, hat2), the n-fold glued element plus
///     remainders in each factor, hat_i not above rho_i.
/// Immutable value; equality and ordering are structural.
class Element {
 public:
  Element() : repr_(std::vector<std::int64_t>{}) {}

  static Element vector_form(std::vector<std::int64_t> coords);
  static Element glued_form(std::int64_t n, Element hat1, Element hat2);

  bool is_vector() const { return std::holds_alternative<Coords>(repr_); }
  bool is_glued() const { return !is_vector(); }

  const std::vector<std::int64_t>& coords() const;
  std::int64_t glue_count() const;
  const Element& hat1() const;
  const Element& hat2() const;

  bool is_zero() const;

  bool operator==(const Element& other) const { return compare(other) == 0; }
  bool operator!=(const Element& other) const { return compare(other) != 0; }
  bool operator<(const Element& other) const { return compare(other) < 0; }

  /// Structural three-way comparison; vector forms sort before glued forms.
  int compare(const Element& other) const;

  std::size_t hash() const;

  /// Compact JSON text: "[1,0]" or {"n":1,"hat1":[0],"hat2":[0]}.
  std::string to_string() const;

 private:
  struct Glue;
  using Coords = std::vector<std::int64_t>;
  std::variant<Coords, std::shared_ptr<const Glue>> repr_;
};

struct Element::Glue {
  std::int64_t n;
  Element hat1;
  Element hat2;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const { return e.hash(); }
};

}  // namespace frob
