#include "frob/gluing.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "frob/errors.hpp"
#include "frob/parallel.hpp"

namespace frob {

namespace {

void require_glued(const Monoid& g, const char* what) {
  if (g.kind() != Monoid::Kind::glued)
    throw std::invalid_argument(std::string(what) + " requires a glued monoid");
}

// factor Betti vectors with a shared memo; thread-safe
class FactorBetti {
 public:
  FactorBetti(const Monoid& m, const FieldChoice& field, const HomologyOptions& options)
      : m_(m), field_(field), options_(options) {}

  BettiVector operator()(const Element& lam) {
    {
      std::lock_guard<std::mutex> lk(mu_);
      const auto it = memo_.find(lam);
      if (it != memo_.end()) return it->second;
    }
    BettiVector b = betti_vector(m_, lam, field_, options_);
    std::lock_guard<std::mutex> lk(mu_);
    return memo_.emplace(lam, std::move(b)).first->second;
  }

 private:
  const Monoid& m_;
  FieldChoice field_;
  HomologyOptions options_;
  std::mutex mu_;
  std::unordered_map<Element, BettiVector, ElementHash> memo_;
};

void sort_entries(PoincareTable& t) {
  std::sort(t.entries.begin(), t.entries.end(),
            [](const PoincareTable::Entry& a, const PoincareTable::Entry& b) {
              if (a.degree != b.degree) return a.degree < b.degree;
              return a.element < b.element;
            });
}

}  // namespace

std::vector<Decomposition> enumerate_decompositions(const Monoid& g, const Element& lam) {
  require_glued(g, "enumerate_decompositions");
  const std::int64_t n = lam.glue_count();
  std::vector<Decomposition> out;
  out.reserve(static_cast<std::size_t>((n + 2) * (n + 1) / 2));
  for (std::int64_t ell = 0; ell <= n; ++ell) {
    for (std::int64_t l1 = 0; l1 + ell <= n; ++l1) {
      const std::int64_t l2 = n - ell - l1;
      const Element lam1 = g.left().add(g.left().scale(l1, g.rho1()), lam.hat1());
      const Element lam2 = g.right().add(g.right().scale(l2, g.rho2()), lam.hat2());
      out.push_back({ell, lam1, lam2});
    }
  }
  return out;
}

namespace {

BettiVector predicted_betti_memo(const Monoid& g, const Element& lam, FactorBetti& left,
                                 FactorBetti& right) {
  BettiVector total;
  for (const auto& d : enumerate_decompositions(g, lam)) {
    const BettiVector b1 = left(d.lam1);
    if (b1.is_zero()) continue;
    const BettiVector b2 = right(d.lam2);
    if (b2.is_zero()) continue;
    total += convolve(b1, b2).shifted(static_cast<std::size_t>(2 * d.ell));
  }
  return total;
}

}  // namespace

BettiVector predicted_betti(const Monoid& g, const Element& lam, const FieldChoice& field,
                            const HomologyOptions& options) {
  require_glued(g, "predicted_betti");
  FactorBetti left(g.left(), field, options), right(g.right(), field, options);
  return predicted_betti_memo(g, lam, left, right);
}

PoincareTable predicted_poincare_table(const Monoid& g, std::int64_t degree_bound,
                                       const FieldChoice& field, unsigned jobs,
                                       const HomologyOptions& options) {
  require_glued(g, "predicted_poincare_table");
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be non-negative");
  PoincareTable table{g, degree_bound, field, {}};
  const auto elements = g.elements_up_to(degree_bound);
  FactorBetti left(g.left(), field, options), right(g.right(), field, options);
  std::vector<BettiVector> betti(elements.size());
  parallel_for(elements.size(), jobs, [&](std::size_t i) {
    betti[i] = predicted_betti_memo(g, elements[i], left, right);
  });
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (betti[i].is_zero()) continue;
    table.entries.push_back({elements[i], g.degree(elements[i]), std::move(betti[i])});
  }
  return table;
}

PoincareTable predicted_poincare_table_series(const Monoid& g, std::int64_t degree_bound,
                                              const FieldChoice& field, unsigned jobs,
                                              const HomologyOptions& options) {
  require_glued(g, "predicted_poincare_table_series");
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be non-negative");
  // degrees of embedded factor elements are weighted by the opposite rho
  const std::int64_t w1 = g.right().degree(g.rho2());
  const std::int64_t w2 = g.left().degree(g.rho1());
  const std::int64_t rho_degree = w1 * w2;
  const PoincareTable t1 = poincare_table(g.left(), degree_bound / w1, field, jobs, options);
  const PoincareTable t2 = poincare_table(g.right(), degree_bound / w2, field, jobs, options);

  std::unordered_map<Element, BettiVector, ElementHash> acc;
  for (std::int64_t ell = 0; ell * rho_degree <= degree_bound; ++ell) {
    for (const auto& e1 : t1.entries) {
      const std::int64_t d1 = ell * rho_degree + w1 * e1.degree;
      if (d1 > degree_bound) continue;
      for (const auto& e2 : t2.entries) {
        if (d1 + w2 * e2.degree > degree_bound) continue;
        Element key = g.from_pair(e1.element, e2.element);
        key = Element::glued_form(key.glue_count() + ell, key.hat1(), key.hat2());
        acc[key] += convolve(e1.betti, e2.betti).shifted(static_cast<std::size_t>(2 * ell));
      }
    }
  }
  PoincareTable table{g, degree_bound, field, {}};
  for (auto& [element, betti] : acc) {
    if (betti.is_zero()) continue;
    table.entries.push_back({element, g.degree(element), std::move(betti)});
  }
  sort_entries(table);
  return table;
}

VerificationReport verify_gluing(const Monoid& g, std::int64_t degree_bound,
                                 const FieldChoice& field, unsigned jobs,
                                 const HomologyOptions& options) {
  require_glued(g, "verify_gluing");
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be non-negative");
  VerificationReport report{g, degree_bound, field, {}, 0, 0, 0, std::nullopt};
  const auto elements = g.elements_up_to(degree_bound);
  report.rows.resize(elements.size());
  FactorBetti left(g.left(), field, options), right(g.right(), field, options);
  parallel_for(elements.size(), jobs, [&](std::size_t i) {
    auto& row = report.rows[i];
    row.element = elements[i];
    row.degree = g.degree(elements[i]);
    try {
      row.direct = betti_vector(g, elements[i], field, options);
      row.predicted = predicted_betti_memo(g, elements[i], left, right);
      row.match = row.direct == row.predicted;
    } catch (const resource_error& e) {
      row.error = e.what();
      row.match = false;
    }
  });
  for (const auto& row : report.rows) {
    if (row.error) {
      ++report.errors;
    } else if (row.match) {
      ++report.matched;
    } else {
      ++report.mismatched;
      if (!report.first_mismatch) {
        VerificationReport::MismatchDetail detail;
        detail.element = row.element;
        auto interval = g.open_interval(row.element);
        detail.interval_elements = std::move(interval.elements);
        detail.interval_covers = interval.order.cover_pairs();
        detail.direct = row.direct;
        detail.predicted = row.predicted;
        report.first_mismatch = std::move(detail);
      }
    }
  }
  return report;
}

}  // namespace frob
