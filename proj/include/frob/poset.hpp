#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "frob/simplicial_complex.hpp"

namespace frob {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

/// Fixed-width bit row used for poset relations.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i >> 6] |= 1ULL << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  std::size_t size() const { return n_; }

  BitRow& operator|=(const BitRow& o);
  BitRow& operator&=(const BitRow& o);
  BitRow& and_not(const BitRow& o);
  bool none() const;
  std::size_t count() const;
  /// Calls fn(i) for each set bit, ascending.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        const int b = __builtin_ctzll(w);
        fn(wi * 64 + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace detail

/// Finite poset over indices 0..n-1.  Constructed from strict-order pairs;
/// the transitive closure is computed and antisymmetry is verified.
class FinitePoset {
 public:
  FinitePoset() = default;
  FinitePoset(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& strict_pairs);

  std::size_t size() const { return n_; }
  bool less(std::size_t i, std::size_t j) const { return below_[j].test(i); }

  /// Covering pairs (i, j) with i covered by j, in (j, i) scan order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cover_pairs() const;

  /// Indices sorted by (number of elements below, index): a linear extension.
  std::vector<std::uint32_t> linear_extension() const;

  FinitePoset induced(const std::vector<std::uint32_t>& keep) const;

  /// Indices surviving iterated removal of beat points (elements whose strict
  /// down-set has a maximum or strict up-set has a minimum).  Removal is a
  /// deformation retraction of the order complex, so homotopy type is kept.
  std::vector<std::uint32_t> core_points() const;

  /// Partition into ordinal summands P = B1 + B2 + ... (every element of an
  /// earlier block below every element of a later block), finest such.  The
  /// order complex is then the join of the blocks' order complexes.
  std::vector<std::vector<std::uint32_t>> ordinal_blocks() const;

  /// Number of non-empty chains, i.e. simplices of the order complex.
  BigInt chain_count() const;

 private:
  std::size_t n_ = 0;
  std::vector<detail::BitRow> below_, above_;
};

/// Order complex: simplices are the non-empty chains.
SimplicialComplex order_complex(const FinitePoset& p,
                                std::size_t simplex_cap = SimplicialComplex::kDefaultSimplexCap);

}  // namespace frob
