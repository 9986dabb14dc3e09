#pragma once

#include <cstdint>
#include <vector>

#include "frob/monoid.hpp"
#include "frob/poset.hpp"

namespace frob {

/// Ordered partition of a monoid element into nonzero parts.
struct Composition {
  std::vector<Element> parts;

  bool operator==(const Composition& o) const { return parts == o.parts; }
  std::string to_string() const;  // e.g. "[2]|[2]|[2]"
};

struct CompositionOptions {
  /// Exceeding this part count is an error, not a truncation.
  std::size_t max_parts = 64;
  /// Cap on the number of compositions; checked by counting before
  /// enumeration.
  std::size_t max_count = 1'000'000;
};

/// Poset of compositions of `total` with at least two parts, ordered by
/// merging adjacent parts (the merged composition is smaller).
struct CompositionPoset {
  Element total;
  std::vector<Composition> elements;
  FinitePoset order;
};

/// Number of compositions of lam into at least two nonzero parts.
BigInt composition_count(const Monoid& m, const Element& lam);

CompositionPoset composition_poset(const Monoid& m, const Element& lam,
                                   const CompositionOptions& options = {});

/// The chain of proper partial sums of a composition: an order isomorphism
/// onto the face poset of the order complex of (0, total).
std::vector<Element> partial_sum_chain(const Monoid& m, const Composition& c);

/// Inverse of the partial-sum map: consecutive differences of a chain in
/// (0, lam), closed off with lam minus the last entry.
Composition composition_from_chain(const Monoid& m, const Element& lam,
                                   const std::vector<Element>& chain);

}  // namespace frob
