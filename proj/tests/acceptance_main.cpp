// Acceptance suite: one pass/fail line per criterion, exact integer
// comparisons throughout, wall-clock limits enforced where stated.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "frob/composition.hpp"
#include "frob/frobenius.hpp"
#include "frob/gluing.hpp"
#include "frob/monoid.hpp"
#include "oracles.hpp"

using namespace frob;

namespace {

const FieldChoice kQ = FieldChoice::rationals();
const FieldChoice kF2 = FieldChoice::prime_field(2);

Element vec(std::vector<std::int64_t> v) { return Element::vector_form(std::move(v)); }
Monoid m23() { return Monoid::submonoid(1, {{2}, {3}}); }

Monoid glued_nn(std::int64_t a, std::int64_t b) {
  const auto n = Monoid::free_monoid(1);
  return Monoid::glued(n, n, vec({b}), vec({a}));
}

const std::vector<std::pair<std::int64_t, std::int64_t>> kPairs{{2, 3}, {2, 5}, {3, 4}, {3, 5}};

struct Runner {
  int failures = 0;
  int index = 0;

  void criterion(const std::string& name, double time_limit_seconds,
                 const std::function<bool(std::string&)>& body) {
    ++index;
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit_seconds > 0 && elapsed >= time_limit_seconds) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("time limit exceeded");
    }
    if (!ok) ++failures;
    std::printf("[%d/9] %s  %s (%.2fs)%s%s\n", index, ok ? "PASS" : "FAIL", name.c_str(), elapsed,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
  }
};

}  // namespace

int main() {
  Runner r;

  r.criterion("Frobenius complexes of N: delta_0, delta_1, then contractible through n = 20", 1.0,
              [](std::string& detail) {
                const auto n = Monoid::free_monoid(1);
                for (std::int64_t k = 0; k <= 20; ++k) {
                  const auto b = betti_vector(n, vec({k}), kQ);
                  const BettiVector want = k == 0   ? BettiVector::delta(0)
                                           : k == 1 ? BettiVector::delta(1)
                                                    : BettiVector();
                  if (b != want) {
                    detail = "wrong vector at n = " + std::to_string(k);
                    return false;
                  }
                }
                return true;
              });

  r.criterion(
      "gluing decomposition for Glued(N,N,b.u,a.v), (a,b) in {(2,3),(2,5),(3,4),(3,5)}, bound 40, Q and GF(2)",
      300.0, [](std::string& detail) {
        for (const auto& [a, b] : kPairs) {
          const auto g = glued_nn(a, b);
          for (const auto& field : {kQ, kF2}) {
            const auto report = verify_gluing(g, 40, field);
            if (!report.all_match()) {
              std::ostringstream os;
              os << "<" << a << "," << b << "> over " << field.to_string() << ": "
                 << report.mismatched << " mismatches, " << report.errors << " errors";
              detail = os.str();
              return false;
            }
          }
        }
        return true;
      });

  r.criterion("gluing decomposition with non-free factors: adjoin_root(<2,3>,6,2) and Glued(<2,3>,N,6,2v), bound 30",
              300.0, [](std::string& detail) {
                const auto g1 = m23().adjoin_root(vec({6}), 2);
                const auto g2 = Monoid::glued(m23(), Monoid::free_monoid(1), vec({6}), vec({2}));
                for (const auto& g : {g1, g2}) {
                  const auto report = verify_gluing(g, 30, kQ);
                  if (!report.all_match()) {
                    detail = g.describe() + ": " + std::to_string(report.mismatched) +
                             " mismatches, " + std::to_string(report.errors) + " errors";
                    return false;
                  }
                }
                return true;
              });

  r.criterion("truncated series product equals the direct table for every glued monoid above",
              0, [](std::string& detail) {
                std::vector<std::pair<Monoid, std::int64_t>> cases;
                for (const auto& [a, b] : kPairs) cases.emplace_back(glued_nn(a, b), 40);
                cases.emplace_back(m23().adjoin_root(vec({6}), 2), 30);
                cases.emplace_back(
                    Monoid::glued(m23(), Monoid::free_monoid(1), vec({6}), vec({2})), 30);
                for (const auto& [g, bound] : cases) {
                  for (const auto& field : {kQ, kF2}) {
                    const auto predicted = predicted_poincare_table_series(g, bound, field);
                    const auto direct = poincare_table(g, bound, field);
                    const auto cmp = compare_tables(predicted, direct);
                    if (!cmp.all_match()) {
                      detail = g.describe() + " over " + field.to_string() + ": " +
                               std::to_string(cmp.mismatches) + " entry mismatches";
                      return false;
                    }
                  }
                }
                return true;
              });

  r.criterion("direct sums: table of <2,3> (+) N in N^2 equals the factor product through degree 20",
              0, [](std::string& detail) {
                const auto product = Monoid::submonoid(2, {{2, 0}, {3, 0}, {0, 1}});
                const auto direct = poincare_table(product, 20, kQ);
                const auto t1 = poincare_table(m23(), 20, kQ);
                const auto t2 = poincare_table(Monoid::free_monoid(1), 20, kQ);
                const auto predicted = dirsum_predicted_table(t1, t2);
                const auto cmp = compare_tables(direct, predicted);
                if (!cmp.all_match()) {
                  detail = std::to_string(cmp.mismatches) + " entry mismatches";
                  return false;
                }
                detail = std::to_string(cmp.rows.size()) + " entries compared";
                return true;
              });

  r.criterion("composition posets for <2,3> and Free(2) through degree 15", 0,
              [](std::string& detail) {
                std::ostringstream os;
                for (const auto& m : {m23(), Monoid::free_monoid(2)}) {
                  const auto report = verify_composition_poset(m, 15, kQ);
                  if (!report.all_ok()) {
                    detail = m.describe() + ": " + std::to_string(report.count_mismatches) +
                             " count and " + std::to_string(report.betti_mismatches) +
                             " Betti mismatches";
                    return false;
                  }
                  os << m.describe() << ": counts on " << report.rows.size() << ", Betti on "
                     << report.betti_checked << " (" << report.betti_skipped
                     << " beyond the enumeration budget); ";
                }
                detail = os.str();
                return true;
              });

  r.criterion("normal forms: canonical triples are unique among all box representations, degree <= 30",
              0, [](std::string& detail) {
                for (const auto& [a, b] : kPairs) {
                  const auto g = glued_nn(a, b);
                  const oracles::PairCongruence cong(a, b, 30);
                  const auto elements = g.elements_up_to(30);
                  const auto classes = cong.classes();
                  if (classes.size() != elements.size()) {
                    detail = "class count != element count for <" + std::to_string(a) + "," +
                             std::to_string(b) + ">";
                    return false;
                  }
                  for (const auto& lam : elements) {
                    // expansion of the canonical triple lands in one class ...
                    const std::int64_t h1 = lam.hat1().coords()[0];
                    const std::int64_t h2 = lam.hat2().coords()[0];
                    const std::size_t root =
                        cong.find(cong.at(b * lam.glue_count() + h1, h2));
                    // ... whose unique small-remainder triple is the canonical one:
                    // count triples (m, y1, y2), y1 < b, y2 < a, whose expansion
                    // m*rho + y1 + y2 falls in the same class
                    std::size_t matches = 0;
                    bool canonical_seen = false;
                    const std::int64_t deg = g.degree(lam);
                    for (std::int64_t m = 0; a * b * m <= deg; ++m) {
                      for (std::int64_t y1 = 0; y1 < b; ++y1) {
                        for (std::int64_t y2 = 0; y2 < a; ++y2) {
                          if (a * b * m + a * y1 + b * y2 != deg) continue;
                          if (cong.find(cong.at(b * m + y1, y2)) != root) continue;
                          ++matches;
                          if (m == lam.glue_count() && y1 == h1 && y2 == h2)
                            canonical_seen = true;
                        }
                      }
                    }
                    if (matches != 1 || !canonical_seen) {
                      detail = "normal form not unique at degree " + std::to_string(deg) +
                               " in <" + std::to_string(a) + "," + std::to_string(b) + ">";
                      return false;
                    }
                  }
                }
                return true;
              });

  r.criterion("homology engine sanity: boundary spheres, d.d = 0 and Euler checks on every computation",
              0, [](std::string& detail) {
                for (std::size_t n = 1; n <= 5; ++n) {
                  const auto k = SimplicialComplex::boundary_of_simplex(n);
                  if (reduced_betti(k, kQ) != BettiVector::delta(n + 1)) {
                    detail = "boundary of the " + std::to_string(n) + "-simplex";
                    return false;
                  }
                }
                const auto stats = homology_check_stats();
                if (stats.boundary_square_checks == 0 || stats.euler_checks == 0) {
                  detail = "internal checks did not run";
                  return false;
                }
                detail = "d.d and Euler identities verified on " +
                         std::to_string(stats.boundary_square_checks) + " complexes";
                return true;
              });

  r.criterion("two-generator tables are single spheres with multiplicity one (bound 40)", 0,
              [](std::string& detail) {
                for (const auto& [a, b] : kPairs) {
                  const auto t = poincare_table(glued_nn(a, b), 40, kQ);
                  const auto series = oracles::two_generator_series(a, b, 40);
                  std::map<std::int64_t, std::map<std::size_t, std::uint64_t>> direct;
                  for (const auto& e : t.entries) {
                    const auto entries = e.betti.nonzero_entries();
                    if (entries.size() != 1 || entries.begin()->second != 1) {
                      detail = "entry with more than one sphere in <" + std::to_string(a) + "," +
                               std::to_string(b) + ">";
                      return false;
                    }
                    direct[e.degree] = entries;
                  }
                  if (direct != series) {
                    detail = "table disagrees with the closed form for <" + std::to_string(a) +
                             "," + std::to_string(b) + ">";
                    return false;
                  }
                }
                return true;
              });

  std::printf("%s: %d/9 criteria passed\n", r.failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              9 - r.failures);
  return r.failures == 0 ? 0 : 1;
}
