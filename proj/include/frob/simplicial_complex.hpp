#pragma once

#include <cstdint>
#include <vector>

namespace frob {

/// Finite abstract simplicial complex over vertices 0..vertex_count-1.
/// Simplices are sorted vertex lists, stored per dimension in lexicographic
/// order and closed under taking non-empty faces.  A complex with no
/// simplices is the EMPTY complex S^{-1}.
class SimplicialComplex {
 public:
  static constexpr std::size_t kDefaultSimplexCap = 1'000'000;

  SimplicialComplex() = default;  // the EMPTY complex

  static SimplicialComplex empty_complex() { return SimplicialComplex(); }

  /// Builds the downward closure of the given facets.
  static SimplicialComplex from_facets(std::size_t vertex_count,
                                       const std::vector<std::vector<std::uint32_t>>& facets,
                                       std::size_t simplex_cap = kDefaultSimplexCap);

  /// Takes an explicit simplex list; verifies downward closure unless the
  /// caller guarantees it.
  static SimplicialComplex from_simplices(std::size_t vertex_count,
                                          std::vector<std::vector<std::uint32_t>> simplices,
                                          std::size_t simplex_cap = kDefaultSimplexCap,
                                          bool verify_closure = true);

  /// Boundary of the n-simplex, a triangulated (n-1)-sphere.
  static SimplicialComplex boundary_of_simplex(std::size_t n);

  std::size_t vertex_count() const { return vertex_count_; }
  bool is_empty_complex() const { return total_ == 0; }
  int dimension() const { return static_cast<int>(dims_.size()) - 1; }
  std::size_t simplex_count() const { return total_; }
  std::size_t count(std::size_t dim) const {
    return dim < dims_.size() ? dims_[dim].size() : 0;
  }
  const std::vector<std::vector<std::uint32_t>>& simplices(std::size_t dim) const;

  /// Maximal simplices.
  std::vector<std::vector<std::uint32_t>> facet_list() const;

  bool operator==(const SimplicialComplex& o) const {
    return vertex_count_ == o.vertex_count_ && dims_ == o.dims_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::size_t total_ = 0;
  std::vector<std::vector<std::vector<std::uint32_t>>> dims_;
};

/// Join: simplices are unions of a simplex (or nothing) from each side, not
/// both nothing; the right-hand vertex set is shifted.  EMPTY is the identity.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l,
                       std::size_t simplex_cap = SimplicialComplex::kDefaultSimplexCap);

/// Join with two fresh points.
SimplicialComplex suspension(const SimplicialComplex& k,
                             std::size_t simplex_cap = SimplicialComplex::kDefaultSimplexCap);

}  // namespace frob
