#include "frob/poset.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "frob/errors.hpp"

namespace frob {

namespace detail {

BitRow& BitRow::operator|=(const BitRow& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

BitRow& BitRow::operator&=(const BitRow& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

BitRow& BitRow::and_not(const BitRow& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

bool BitRow::none() const {
  for (auto w : w_)
    if (w) return false;
  return true;
}

std::size_t BitRow::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

}  // namespace detail

using detail::BitRow;

FinitePoset::FinitePoset(std::size_t n,
                         const std::vector<std::pair<std::uint32_t, std::uint32_t>>& strict_pairs)
    : n_(n) {
  std::vector<std::vector<std::uint32_t>> out_edges(n);
  std::vector<std::uint32_t> indeg(n, 0);
  {
    std::unordered_set<std::uint64_t> seen;
    for (auto [a, b] : strict_pairs) {
      if (a >= n || b >= n) throw std::invalid_argument("poset relation index out of range");
      if (a == b) throw std::invalid_argument("poset relation is not irreflexive");
      if (seen.insert(static_cast<std::uint64_t>(a) * n + b).second) {
        out_edges[a].push_back(b);
        ++indeg[b];
      }
    }
  }
  // Kahn's algorithm: topological order doubles as the antisymmetry check
  std::vector<std::uint32_t> topo;
  topo.reserve(n);
  for (std::uint32_t v = 0; v < n; ++v)
    if (indeg[v] == 0) topo.push_back(v);
  for (std::size_t head = 0; head < topo.size(); ++head) {
    for (auto w : out_edges[topo[head]])
      if (--indeg[w] == 0) topo.push_back(w);
  }
  if (topo.size() != n)
    throw std::invalid_argument("poset relation has a cycle (antisymmetry violated)");

  below_.assign(n, BitRow(n));
  for (auto v : topo) {
    for (auto w : out_edges[v]) {
      below_[w] |= below_[v];
      below_[w].set(v);
    }
  }
  above_.assign(n, BitRow(n));
  for (std::size_t j = 0; j < n; ++j)
    below_[j].for_each([&](std::size_t i) { above_[i].set(j); });
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> FinitePoset::cover_pairs() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t j = 0; j < n_; ++j) {
    below_[j].for_each([&](std::size_t i) {
      BitRow between = below_[j];
      between &= above_[i];
      if (between.none()) out.emplace_back(static_cast<std::uint32_t>(i), j);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> FinitePoset::linear_extension() const {
  std::vector<std::uint32_t> order(n_);
  for (std::uint32_t i = 0; i < n_; ++i) order[i] = i;
  std::vector<std::size_t> cnt(n_);
  for (std::size_t i = 0; i < n_; ++i) cnt[i] = below_[i].count();
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return std::tie(cnt[a], a) < std::tie(cnt[b], b); });
  return order;
}

FinitePoset FinitePoset::induced(const std::vector<std::uint32_t>& keep) const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t a = 0; a < keep.size(); ++a)
    for (std::uint32_t b = 0; b < keep.size(); ++b)
      if (a != b && less(keep[a], keep[b])) pairs.emplace_back(a, b);
  return FinitePoset(keep.size(), pairs);
}

std::vector<std::uint32_t> FinitePoset::core_points() const {
  BitRow alive(n_);
  for (std::size_t i = 0; i < n_; ++i) alive.set(i);

  // true iff the alive-restricted strict down-set (or up-set) of x has a
  // maximum (resp. minimum)
  auto is_beat = [&](std::size_t x) {
    for (int side = 0; side < 2; ++side) {
      const auto& dir = side == 0 ? below_ : above_;
      const auto& opp = side == 0 ? above_ : below_;
      BitRow set = dir[x];
      set &= alive;
      if (set.none()) continue;
      // the first extreme element of `set`; a maximum/minimum must equal it
      std::size_t m = n_;
      set.for_each([&](std::size_t cand) {
        if (m != n_) return;
        BitRow beyond = opp[cand];
        beyond &= set;
        if (beyond.none()) m = cand;
      });
      if (m == n_) continue;
      BitRow rest = set;
      rest.reset(m);
      rest.and_not(dir[m]);
      if (rest.none()) return true;
    }
    return false;
  };

  std::deque<std::uint32_t> queue;
  std::vector<bool> queued(n_, true);
  for (std::uint32_t i = 0; i < n_; ++i) queue.push_back(i);
  std::size_t alive_count = n_;
  while (!queue.empty()) {
    const std::uint32_t x = queue.front();
    queue.pop_front();
    queued[x] = false;
    if (!alive.test(x) || alive_count <= 1) continue;
    if (!is_beat(x)) continue;
    alive.reset(x);
    --alive_count;
    BitRow nbrs = below_[x];
    nbrs |= above_[x];
    nbrs &= alive;
    nbrs.for_each([&](std::size_t y) {
      if (!queued[y]) {
        queued[y] = true;
        queue.push_back(static_cast<std::uint32_t>(y));
      }
    });
  }
  std::vector<std::uint32_t> kept;
  alive.for_each([&](std::size_t i) { kept.push_back(static_cast<std::uint32_t>(i)); });
  return kept;
}

std::vector<std::vector<std::uint32_t>> FinitePoset::ordinal_blocks() const {
  std::vector<std::vector<std::uint32_t>> blocks;
  if (n_ == 0) return blocks;
  const auto order = linear_extension();
  BitRow prefix(n_);
  std::size_t start = 0;
  for (std::size_t k = 1; k <= n_; ++k) {
    prefix.set(order[k - 1]);
    bool cut = true;
    if (k < n_) {
      for (std::size_t j = k; j < n_ && cut; ++j) {
        BitRow missing = prefix;
        missing.and_not(below_[order[j]]);
        if (!missing.none()) cut = false;
      }
    }
    if (cut) {
      std::vector<std::uint32_t> block(order.begin() + static_cast<std::ptrdiff_t>(start),
                                       order.begin() + static_cast<std::ptrdiff_t>(k));
      std::sort(block.begin(), block.end());
      blocks.push_back(std::move(block));
      start = k;
    }
  }
  return blocks;
}

BigInt FinitePoset::chain_count() const {
  const auto order = linear_extension();
  std::vector<BigInt> ending(n_);
  BigInt total = 0;
  for (auto v : order) {
    BigInt c = 1;
    below_[v].for_each([&](std::size_t u) { c += ending[u]; });
    ending[v] = c;
    total += c;
  }
  return total;
}

SimplicialComplex order_complex(const FinitePoset& p, std::size_t simplex_cap) {
  std::vector<std::vector<std::uint32_t>> chains;
  std::vector<std::uint32_t> cur;
  const std::size_t n = p.size();

  auto extend = [&](auto&& self, std::uint32_t last) -> void {
    for (std::uint32_t w = 0; w < n; ++w) {
      if (!p.less(last, w)) continue;
      cur.push_back(w);
      if (chains.size() >= simplex_cap)
        throw resource_error("order complex exceeds simplex cap of " + std::to_string(simplex_cap));
      chains.push_back(cur);
      self(self, w);
      cur.pop_back();
    }
  };
  for (std::uint32_t v = 0; v < n; ++v) {
    cur.assign(1, v);
    if (chains.size() >= simplex_cap)
      throw resource_error("order complex exceeds simplex cap of " + std::to_string(simplex_cap));
    chains.push_back(cur);
    extend(extend, v);
  }
  for (auto& c : chains) std::sort(c.begin(), c.end());
  return SimplicialComplex::from_simplices(n, std::move(chains), simplex_cap, false);
}

}  // namespace frob
