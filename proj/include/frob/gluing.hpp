#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frob/frobenius.hpp"
#include "frob/monoid.hpp"

namespace frob {

/// One way of writing lam as l*rho + lam1 + lam2 in a glued monoid, with
/// lam1, lam2 drawn from the factors.
struct Decomposition {
  std::int64_t ell;
  Element lam1, lam2;
};

/// All decompositions of lam.  By uniqueness of the canonical triple
/// (n, hat1, hat2) these are exactly (l, l1*rho1 + hat1, l2*rho2 + hat2)
/// with l + l1 + l2 = n, so there are (n+2 choose 2) of them.
std::vector<Decomposition> enumerate_decompositions(const Monoid& g, const Element& lam);

/// Betti vector predicted by the gluing decomposition: the sum over
/// decompositions of the convolved factor vectors shifted by 2l.  Factor
/// vectors are computed by direct homology.
BettiVector predicted_betti(const Monoid& g, const Element& lam, const FieldChoice& field,
                            const HomologyOptions& options = {});

/// Table of predicted Betti vectors, entry by entry.
PoincareTable predicted_poincare_table(const Monoid& g, std::int64_t degree_bound,
                                       const FieldChoice& field, unsigned jobs = 1,
                                       const HomologyOptions& options = {});

/// Same table computed as the truncated series product
/// P_left * P_right * sum_l t^(2l) z^(l rho).
PoincareTable predicted_poincare_table_series(const Monoid& g, std::int64_t degree_bound,
                                              const FieldChoice& field, unsigned jobs = 1,
                                              const HomologyOptions& options = {});

/// Element-by-element comparison of direct homology against the gluing
/// prediction.
struct VerificationReport {
  struct Row {
    Element element;
    std::int64_t degree;
    BettiVector direct, predicted;
    bool match = false;
    std::optional<std::string> error;  // resource errors, recorded per element
  };
  Monoid monoid;
  std::int64_t degree_bound = 0;
  FieldChoice field = FieldChoice::rationals();
  std::vector<Row> rows;
  std::size_t matched = 0, mismatched = 0, errors = 0;

  /// Interval poset of the smallest failing element, for diagnosis.
  struct MismatchDetail {
    Element element;
    std::vector<Element> interval_elements;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> interval_covers;
    BettiVector direct, predicted;
  };
  std::optional<MismatchDetail> first_mismatch;

  bool all_match() const { return mismatched == 0 && errors == 0; }
  /// 0 full match, 1 any mismatch, 2 any resource error.
  int exit_code() const { return errors ? 2 : (mismatched ? 1 : 0); }
};

VerificationReport verify_gluing(const Monoid& g, std::int64_t degree_bound,
                                 const FieldChoice& field, unsigned jobs = 1,
                                 const HomologyOptions& options = {});

}  // namespace frob
