#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frob/betti.hpp"
#include "frob/homology.hpp"
#include "frob/monoid.hpp"

namespace frob {

/// The Frobenius complex F(lam): the order complex of (0, lam), or the
/// formal symbol S^{-2} when lam = 0.
struct FrobeniusComplex {
  bool formal_s2 = false;
  std::vector<Element> vertex_labels;  // interval elements, complex vertex order
  SimplicialComplex complex;
};

FrobeniusComplex frobenius_complex(const Monoid& m, const Element& lam,
                                   std::size_t simplex_cap = SimplicialComplex::kDefaultSimplexCap);

/// Tor-graded Betti vector of lam: delta(0) at lam = 0, otherwise the reduced
/// Betti numbers of the Frobenius complex shifted by two.  Computed through
/// the reduced poset pipeline unless options say otherwise.
BettiVector betti_vector(const Monoid& m, const Element& lam, const FieldChoice& field,
                         const HomologyOptions& options = {});

/// Number of simplices of the Frobenius complex (chain count of the open
/// interval), without enumeration.
BigInt frobenius_simplex_count(const Monoid& m, const Element& lam);

/// Truncation of the Poincare series: the Betti vector of every element of
/// degree at most degree_bound.  Only nonzero vectors are stored; entries are
/// sorted by (degree, canonical form).
struct PoincareTable {
  struct Entry {
    Element element;
    std::int64_t degree;
    BettiVector betti;
  };
  Monoid monoid;
  std::int64_t degree_bound = 0;
  FieldChoice field = FieldChoice::rationals();
  std::vector<Entry> entries;

  const BettiVector* find(const Element& e) const;
};

PoincareTable poincare_table(const Monoid& m, std::int64_t degree_bound, const FieldChoice& field,
                             unsigned jobs = 1, const HomologyOptions& options = {});

/// Predicted table of a direct sum: entry at (l1, l2) is the convolution of
/// the factor entries.  Factors must be vector-presented; keys are
/// concatenated vectors in the direct-sum model, so the result compares
/// entrywise against a directly computed table of Monoid::direct_sum.
PoincareTable dirsum_predicted_table(const PoincareTable& t1, const PoincareTable& t2);

/// Entrywise comparison of two tables over the union of their keys.
struct TableComparison {
  struct Row {
    Element element;
    std::int64_t degree;
    BettiVector left, right;
    bool match;
  };
  std::vector<Row> rows;
  std::size_t mismatches = 0;
  bool all_match() const { return mismatches == 0; }
};
TableComparison compare_tables(const PoincareTable& a, const PoincareTable& b);

/// Composition-poset verification: for every nonzero element of degree at
/// most degree_bound, checks that the composition count equals the simplex
/// count of the Frobenius complex, and, when the composition count is within
/// `betti_budget`, that the Betti vector of the order complex of the
/// composition poset equals the direct Betti vector.  Composition posets grow
/// exponentially with degree (Free(2) already passes 10^7 elements at degree
/// 15), so the Betti half is gated on an enumeration budget; the count half
/// runs on everything.
inline constexpr std::size_t kCompositionBettiBudget = 30'000;

struct CompositionCheckReport {
  struct Row {
    Element element;
    std::int64_t degree;
    BigInt composition_count;
    BigInt simplex_count;
    bool counts_match;
    bool betti_checked;
    bool betti_match;  // true when not checked
  };
  std::vector<Row> rows;
  std::size_t count_mismatches = 0;
  std::size_t betti_mismatches = 0;
  std::size_t betti_checked = 0;
  std::size_t betti_skipped = 0;
  bool all_ok() const { return count_mismatches == 0 && betti_mismatches == 0; }
};

CompositionCheckReport verify_composition_poset(const Monoid& m, std::int64_t degree_bound,
                                                const FieldChoice& field,
                                                std::size_t betti_budget = kCompositionBettiBudget);

}  // namespace frob
