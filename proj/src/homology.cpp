#include "frob/homology.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "frob/errors.hpp"
#include "frob/exact_rank.hpp"

namespace frob {

namespace {

std::atomic<std::uint64_t> g_dd_checks{0};
std::atomic<std::uint64_t> g_euler_checks{0};

// column of a boundary matrix: (row index, sign) entries
using SparseColumn = std::vector<std::pair<std::uint32_t, std::int8_t>>;

std::size_t face_index(const std::vector<std::vector<std::uint32_t>>& level,
                       const std::vector<std::uint32_t>& face) {
  const auto it = std::lower_bound(level.begin(), level.end(), face);
  return static_cast<std::size_t>(it - level.begin());
}

}  // namespace

HomologyCheckStats homology_check_stats() {
  return {g_dd_checks.load(), g_euler_checks.load()};
}

BettiVector reduced_betti(const SimplicialComplex& k, const FieldChoice& field,
                          const HomologyOptions& options) {
  if (k.simplex_count() > options.simplex_cap)
    throw resource_error("complex exceeds simplex cap of " + std::to_string(options.simplex_cap));
  if (k.is_empty_complex()) return BettiVector::delta(1);  // reduced H_{-1} = K

  const int dim = k.dimension();
  // sparse boundary columns per dimension >= 1 (dimension 0 boundaries hit the
  // augmentation row and are all-ones)
  std::vector<std::vector<SparseColumn>> boundary(static_cast<std::size_t>(dim) + 1);
  for (int d = 1; d <= dim; ++d) {
    const auto& level = k.simplices(static_cast<std::size_t>(d));
    const auto& faces = k.simplices(static_cast<std::size_t>(d) - 1);
    auto& cols = boundary[static_cast<std::size_t>(d)];
    cols.resize(level.size());
    std::vector<std::uint32_t> face;
    for (std::size_t s = 0; s < level.size(); ++s) {
      const auto& simplex = level[s];
      for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
        face.clear();
        for (std::size_t i = 0; i < simplex.size(); ++i)
          if (i != drop) face.push_back(simplex[i]);
        const std::size_t r = face_index(faces, face);
        if (r >= faces.size() || faces[r] != face)
          throw std::logic_error("boundary face missing from complex");
        cols[s].emplace_back(static_cast<std::uint32_t>(r),
                             static_cast<std::int8_t>(drop % 2 == 0 ? 1 : -1));
      }
    }
  }

  // boundary-squared-zero check on the assembled columns
  for (int d = 1; d <= dim; ++d) {
    const auto& cols = boundary[static_cast<std::size_t>(d)];
    if (d == 1) {
      for (const auto& col : cols) {
        int sum = 0;
        for (const auto& [r, sign] : col) sum += sign;
        if (sum != 0) throw std::logic_error("boundary of boundary is nonzero (augmentation)");
      }
      continue;
    }
    const auto& lower = boundary[static_cast<std::size_t>(d) - 1];
    std::unordered_map<std::uint32_t, int> acc;
    for (const auto& col : cols) {
      acc.clear();
      for (const auto& [r, sign] : col)
        for (const auto& [rr, ssign] : lower[r]) acc[rr] += sign * ssign;
      for (const auto& [rr, v] : acc)
        if (v != 0) throw std::logic_error("boundary of boundary is nonzero");
    }
  }
  g_dd_checks.fetch_add(1, std::memory_order_relaxed);

  // ranks: rank[0] is the augmentation map C_0 -> C_{-1}
  std::vector<std::size_t> rank(static_cast<std::size_t>(dim) + 2, 0);
  rank[0] = k.count(0) > 0 ? 1 : 0;
  for (int d = 1; d <= dim; ++d) {
    const std::size_t rows = k.count(static_cast<std::size_t>(d) - 1);
    const std::size_t cols_n = k.count(static_cast<std::size_t>(d));
    if (rows * cols_n > options.dense_entry_guard)
      throw resource_error("boundary matrix too large: " + std::to_string(rows) + " x " +
                           std::to_string(cols_n));
    IntMatrix m(rows, std::vector<std::int32_t>(cols_n, 0));
    const auto& cols = boundary[static_cast<std::size_t>(d)];
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (const auto& [r, sign] : cols[c]) m[r][c] = sign;
    rank[static_cast<std::size_t>(d)] = matrix_rank(m, field);
  }

  // reduced Betti numbers; dimension -1 first
  std::vector<std::int64_t> betti(static_cast<std::size_t>(dim) + 2, 0);
  betti[0] = 1 - static_cast<std::int64_t>(rank[0]);  // dim -1
  for (int d = 0; d <= dim; ++d)
    betti[static_cast<std::size_t>(d) + 1] =
        static_cast<std::int64_t>(k.count(static_cast<std::size_t>(d))) -
        static_cast<std::int64_t>(rank[static_cast<std::size_t>(d)]) -
        static_cast<std::int64_t>(rank[static_cast<std::size_t>(d) + 1]);

  // Euler characteristic identity over the augmented complex
  std::int64_t chi_faces = -1, chi_betti = 0;
  for (int d = 0; d <= dim; ++d) {
    const std::int64_t f = static_cast<std::int64_t>(k.count(static_cast<std::size_t>(d)));
    chi_faces += (d % 2 == 0) ? f : -f;
  }
  for (std::size_t i = 0; i < betti.size(); ++i) {
    if (betti[i] < 0) throw std::logic_error("negative Betti number");
    chi_betti += (i % 2 == 0) ? -betti[i] : betti[i];  // index 0 is dimension -1
  }
  if (chi_faces != chi_betti)
    throw std::logic_error("Euler characteristic mismatch between faces and homology");
  g_euler_checks.fetch_add(1, std::memory_order_relaxed);

  BettiVector out;
  for (std::size_t i = 0; i < betti.size(); ++i)
    out.add_at(i + 1, static_cast<std::uint64_t>(betti[i]));
  return out;
}

BettiVector order_complex_betti(const FinitePoset& p, const FieldChoice& field,
                                const HomologyOptions& options) {
  if (!options.reduce_posets) return reduced_betti(order_complex(p, options.simplex_cap), field, options);
  const auto core = p.core_points();
  const FinitePoset reduced = p.induced(core);
  BettiVector acc = BettiVector::delta(1);  // the empty complex, join identity
  for (const auto& block : reduced.ordinal_blocks()) {
    const auto complex = order_complex(reduced.induced(block), options.simplex_cap);
    acc = join_product(acc, reduced_betti(complex, field, options));
  }
  return acc;
}

}  // namespace frob
