#include "frob/frobenius.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "frob/composition.hpp"
#include "frob/parallel.hpp"

namespace frob {

FrobeniusComplex frobenius_complex(const Monoid& m, const Element& lam, std::size_t simplex_cap) {
  FrobeniusComplex out;
  if (lam.is_zero()) {
    out.formal_s2 = true;
    return out;
  }
  auto interval = m.open_interval(lam);
  out.vertex_labels = std::move(interval.elements);
  out.complex = order_complex(interval.order, simplex_cap);
  return out;
}

BettiVector betti_vector(const Monoid& m, const Element& lam, const FieldChoice& field,
                         const HomologyOptions& options) {
  if (lam.is_zero()) return BettiVector::delta(0);  // the formal S^{-2}
  const auto interval = m.open_interval(lam);
  return order_complex_betti(interval.order, field, options);
}

BigInt frobenius_simplex_count(const Monoid& m, const Element& lam) {
  if (lam.is_zero()) return 0;
  return m.open_interval(lam).order.chain_count();
}

const BettiVector* PoincareTable::find(const Element& e) const {
  for (const auto& entry : entries)
    if (entry.element == e) return &entry.betti;
  return nullptr;
}

PoincareTable poincare_table(const Monoid& m, std::int64_t degree_bound, const FieldChoice& field,
                             unsigned jobs, const HomologyOptions& options) {
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be non-negative");
  PoincareTable table{m, degree_bound, field, {}};
  const auto elements = m.elements_up_to(degree_bound);
  std::vector<BettiVector> betti(elements.size());
  parallel_for(elements.size(), jobs,
               [&](std::size_t i) { betti[i] = betti_vector(m, elements[i], field, options); });
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (betti[i].is_zero()) continue;
    table.entries.push_back({elements[i], m.degree(elements[i]), std::move(betti[i])});
  }
  return table;
}

PoincareTable dirsum_predicted_table(const PoincareTable& t1, const PoincareTable& t2) {
  if (t1.monoid.kind() == Monoid::Kind::glued || t2.monoid.kind() == Monoid::Kind::glued)
    throw std::invalid_argument("dirsum_predicted_table requires vector-presented factors");
  if (t1.degree_bound != t2.degree_bound)
    throw std::invalid_argument("dirsum_predicted_table requires equal degree bounds");
  if (t1.field != t2.field)
    throw std::invalid_argument("dirsum_predicted_table requires a common field");
  const std::int64_t bound = t1.degree_bound;
  PoincareTable out{Monoid::direct_sum(t1.monoid, t2.monoid), bound, t1.field, {}};
  for (const auto& e1 : t1.entries) {
    for (const auto& e2 : t2.entries) {
      if (e1.degree + e2.degree > bound) continue;
      std::vector<std::int64_t> key = e1.element.coords();
      key.insert(key.end(), e2.element.coords().begin(), e2.element.coords().end());
      const BettiVector b = convolve(e1.betti, e2.betti);
      if (b.is_zero()) continue;
      out.entries.push_back({Element::vector_form(std::move(key)), e1.degree + e2.degree, b});
    }
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const PoincareTable::Entry& a, const PoincareTable::Entry& b) {
              if (a.degree != b.degree) return a.degree < b.degree;
              return a.element < b.element;
            });
  return out;
}

TableComparison compare_tables(const PoincareTable& a, const PoincareTable& b) {
  std::map<std::pair<std::int64_t, Element>, std::pair<BettiVector, BettiVector>> merged;
  for (const auto& e : a.entries) merged[{e.degree, e.element}].first = e.betti;
  for (const auto& e : b.entries) merged[{e.degree, e.element}].second = e.betti;
  TableComparison out;
  for (const auto& [key, pair] : merged) {
    const bool match = pair.first == pair.second;
    out.rows.push_back({key.second, key.first, pair.first, pair.second, match});
    if (!match) ++out.mismatches;
  }
  return out;
}

CompositionCheckReport verify_composition_poset(const Monoid& m, std::int64_t degree_bound,
                                                const FieldChoice& field,
                                                std::size_t betti_budget) {
  CompositionCheckReport report;
  for (const auto& lam : m.elements_up_to(degree_bound)) {
    if (lam.is_zero()) continue;
    CompositionCheckReport::Row row{lam,           m.degree(lam), composition_count(m, lam),
                                    frobenius_simplex_count(m, lam), false, false, true};
    row.counts_match = row.composition_count == row.simplex_count;
    if (!row.counts_match) ++report.count_mismatches;
    if (row.composition_count <= betti_budget) {
      CompositionOptions copts;
      copts.max_count = betti_budget;
      const auto poset = composition_poset(m, lam, copts);
      const BettiVector via_compositions = order_complex_betti(poset.order, field);
      const BettiVector direct = betti_vector(m, lam, field);
      row.betti_checked = true;
      row.betti_match = via_compositions == direct;
      ++report.betti_checked;
      if (!row.betti_match) ++report.betti_mismatches;
    } else {
      ++report.betti_skipped;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace frob
