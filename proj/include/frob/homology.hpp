#pragma once

#include <cstdint>

#include "frob/betti.hpp"
#include "frob/field.hpp"
#include "frob/poset.hpp"
#include "frob/simplicial_complex.hpp"

namespace frob {

struct HomologyOptions {
  std::size_t simplex_cap = SimplicialComplex::kDefaultSimplexCap;
  /// Upper bound on rows*cols of any dense boundary matrix.
  std::size_t dense_entry_guard = 50'000'000;
  /// Reduce posets (beat points, ordinal factorization) before building
  /// order complexes.  Homotopy-exact; disable to force the literal route.
  bool reduce_posets = true;
};

/// Counters for the internal consistency checks that run on every homology
/// computation.
struct HomologyCheckStats {
  std::uint64_t boundary_square_checks = 0;
  std::uint64_t euler_checks = 0;
};
HomologyCheckStats homology_check_stats();

/// Tor-graded reduced Betti numbers of a complex: entry i is the reduced
/// Betti number in dimension i - 2 of the augmented chain complex over the
/// chosen field.  The EMPTY complex yields the unit vector at index 1.
/// Verifies boundary-squared-zero and the Euler characteristic identity on
/// every call.
BettiVector reduced_betti(const SimplicialComplex& k, const FieldChoice& field,
                          const HomologyOptions& options = {});

/// Tor-graded reduced Betti numbers of the order complex of a poset.  With
/// reductions enabled, the poset is dismantled to its core and split into
/// ordinal summands whose order complexes are joined via the field Kunneth
/// formula; the values equal those of the literal order complex.
BettiVector order_complex_betti(const FinitePoset& p, const FieldChoice& field,
                                const HomologyOptions& options = {});

}  // namespace frob
