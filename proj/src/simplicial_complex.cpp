#include "frob/simplicial_complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "frob/errors.hpp"

namespace frob {

namespace {

void check_cap(std::size_t count, std::size_t cap) {
  if (count > cap)
    throw resource_error("simplex count exceeds cap of " + std::to_string(cap));
}

bool sorted_unique(const std::vector<std::uint32_t>& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) return false;
  return true;
}

}  // namespace

const std::vector<std::vector<std::uint32_t>>& SimplicialComplex::simplices(std::size_t dim) const {
  static const std::vector<std::vector<std::uint32_t>> kNone;
  return dim < dims_.size() ? dims_[dim] : kNone;
}

SimplicialComplex SimplicialComplex::from_simplices(std::size_t vertex_count,
                                                    std::vector<std::vector<std::uint32_t>> simplices,
                                                    std::size_t simplex_cap, bool verify_closure) {
  SimplicialComplex k;
  k.vertex_count_ = vertex_count;
  check_cap(simplices.size(), simplex_cap);
  for (auto& s : simplices) {
    if (s.empty()) throw std::invalid_argument("empty simplex");
    if (!std::is_sorted(s.begin(), s.end())) std::sort(s.begin(), s.end());
    if (!sorted_unique(s)) throw std::invalid_argument("simplex has repeated vertices");
    if (s.back() >= vertex_count) throw std::invalid_argument("simplex vertex out of range");
    const std::size_t d = s.size() - 1;
    if (d >= k.dims_.size()) k.dims_.resize(d + 1);
    k.dims_[d].push_back(std::move(s));
  }
  for (auto& level : k.dims_) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    k.total_ += level.size();
  }
  if (!k.dims_.empty() && k.dims_.back().empty())
    throw std::invalid_argument("dimension gap in simplex list");
  if (verify_closure) {
    for (std::size_t d = 1; d < k.dims_.size(); ++d) {
      for (const auto& s : k.dims_[d]) {
        std::vector<std::uint32_t> face(s.size() - 1);
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          face.clear();
          for (std::size_t i = 0; i < s.size(); ++i)
            if (i != drop) face.push_back(s[i]);
          if (!std::binary_search(k.dims_[d - 1].begin(), k.dims_[d - 1].end(), face))
            throw std::invalid_argument("simplex list is not downward closed");
        }
      }
    }
  }
  return k;
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertex_count,
                                                 const std::vector<std::vector<std::uint32_t>>& facets,
                                                 std::size_t simplex_cap) {
  std::vector<std::vector<std::uint32_t>> all;
  std::size_t generated = 0;
  for (auto f : facets) {
    if (f.empty()) throw std::invalid_argument("empty facet");
    std::sort(f.begin(), f.end());
    if (!sorted_unique(f)) throw std::invalid_argument("facet has repeated vertices");
    if (f.size() > 24) throw resource_error("facet too large to expand");
    const std::uint64_t subsets = (1ULL << f.size()) - 1;
    generated += subsets;
    check_cap(generated, simplex_cap);  // pre-dedup bound; sharp enough in practice
    for (std::uint64_t mask = 1; mask <= subsets; ++mask) {
      std::vector<std::uint32_t> s;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (mask & (1ULL << i)) s.push_back(f[i]);
      all.push_back(std::move(s));
    }
  }
  return from_simplices(vertex_count, std::move(all), simplex_cap, false);
}

SimplicialComplex SimplicialComplex::boundary_of_simplex(std::size_t n) {
  if (n == 0) return empty_complex();
  std::vector<std::vector<std::uint32_t>> facets;
  for (std::size_t drop = 0; drop <= n; ++drop) {
    std::vector<std::uint32_t> f;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != drop) f.push_back(static_cast<std::uint32_t>(i));
    facets.push_back(std::move(f));
  }
  return from_facets(n + 1, facets);
}

std::vector<std::vector<std::uint32_t>> SimplicialComplex::facet_list() const {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t d = 0; d < dims_.size(); ++d) {
    for (const auto& s : dims_[d]) {
      bool maximal = true;
      if (d + 1 < dims_.size()) {
        // s is maximal unless some coface exists; test by extending with one vertex
        std::vector<std::uint32_t> probe(s.size() + 1);
        for (std::uint32_t v = 0; v < vertex_count_ && maximal; ++v) {
          if (std::binary_search(s.begin(), s.end(), v)) continue;
          probe.assign(s.begin(), s.end());
          probe.push_back(v);
          std::sort(probe.begin(), probe.end());
          if (std::binary_search(dims_[d + 1].begin(), dims_[d + 1].end(), probe))
            maximal = false;
        }
      }
      if (maximal) out.push_back(s);
    }
  }
  return out;
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l,
                       std::size_t simplex_cap) {
  const std::uint64_t combos =
      (static_cast<std::uint64_t>(k.simplex_count()) + 1) * (l.simplex_count() + 1) - 1;
  check_cap(combos, simplex_cap);
  const std::uint32_t shift = static_cast<std::uint32_t>(k.vertex_count());
  auto each_simplex = [](const SimplicialComplex& c, auto&& fn) {
    for (int d = 0; d <= c.dimension(); ++d)
      for (const auto& s : c.simplices(static_cast<std::size_t>(d))) fn(s);
  };
  std::vector<std::vector<std::uint32_t>> sims;
  sims.reserve(combos);
  each_simplex(k, [&](const std::vector<std::uint32_t>& s) { sims.push_back(s); });
  each_simplex(l, [&](const std::vector<std::uint32_t>& t) {
    std::vector<std::uint32_t> u;
    for (auto v : t) u.push_back(v + shift);
    sims.push_back(std::move(u));
  });
  each_simplex(k, [&](const std::vector<std::uint32_t>& s) {
    each_simplex(l, [&](const std::vector<std::uint32_t>& t) {
      std::vector<std::uint32_t> u = s;
      for (auto v : t) u.push_back(v + shift);
      sims.push_back(std::move(u));
    });
  });
  return SimplicialComplex::from_simplices(k.vertex_count() + l.vertex_count(), std::move(sims),
                                           simplex_cap, false);
}

SimplicialComplex suspension(const SimplicialComplex& k, std::size_t simplex_cap) {
  const SimplicialComplex two_points = SimplicialComplex::from_facets(2, {{0}, {1}});
  return join(k, two_points, simplex_cap);
}

}  // namespace frob
