#include "frob/composition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "frob/errors.hpp"

namespace frob {

namespace {

struct CompositionHash {
  std::size_t operator()(const Composition& c) const {
    std::size_t h = 0x811c9dc5;
    for (const auto& p : c.parts) h = h * 1099511628211ULL + p.hash();
    return h;
  }
};

// total number of compositions into k >= 1 nonzero parts
BigInt count_all(const Monoid& m, const Element& lam,
                 std::unordered_map<Element, BigInt, ElementHash>& memo) {
  if (lam.is_zero()) return 1;
  const auto it = memo.find(lam);
  if (it != memo.end()) return it->second;
  BigInt total = 0;
  for (const auto& mu : m.elements_up_to(m.degree(lam))) {
    if (mu.is_zero()) continue;
    if (!m.divides(mu, lam)) continue;
    const auto rest = m.subtract(lam, mu);
    total += count_all(m, *rest, memo);
  }
  memo.emplace(lam, total);
  return total;
}

}  // namespace

std::string Composition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << "|";
    os << parts[i].to_string();
  }
  return os.str();
}

BigInt composition_count(const Monoid& m, const Element& lam) {
  if (lam.is_zero()) return 0;
  std::unordered_map<Element, BigInt, ElementHash> memo;
  return count_all(m, lam, memo) - 1;  // drop the one-part composition
}

CompositionPoset composition_poset(const Monoid& m, const Element& lam,
                                   const CompositionOptions& options) {
  if (lam.is_zero()) throw std::invalid_argument("composition poset of the zero element");
  const BigInt count = composition_count(m, lam);
  if (count > options.max_count)
    throw resource_error("composition count " + count.str() + " exceeds cap of " +
                         std::to_string(options.max_count));

  // nonzero divisors of lam, sorted; every part of every composition is one
  std::vector<Element> divisors;
  for (const auto& mu : m.elements_up_to(m.degree(lam))) {
    if (mu.is_zero()) continue;
    if (m.divides(mu, lam)) divisors.push_back(mu);
  }

  std::vector<Composition> comps;
  std::vector<Element> acc;
  auto emit = [&](auto&& self, const Element& rest) -> void {
    if (acc.size() >= options.max_parts)
      throw resource_error("composition part count exceeds cap of " +
                           std::to_string(options.max_parts));
    for (const auto& mu : divisors) {
      if (!m.divides(mu, rest)) continue;
      acc.push_back(mu);
      const auto next = m.subtract(rest, mu);
      if (next->is_zero()) {
        if (acc.size() >= 2) comps.push_back(Composition{acc});
      } else {
        self(self, *next);
      }
      acc.pop_back();
    }
  };
  emit(emit, lam);

  std::unordered_map<Composition, std::uint32_t, CompositionHash> index;
  for (std::uint32_t i = 0; i < comps.size(); ++i) index.emplace(comps[i], i);

  // covers: merging adjacent parts of a k-part composition (k >= 3)
  std::vector<std::pair<std::uint32_t, std::uint32_t>> covers;
  for (std::uint32_t i = 0; i < comps.size(); ++i) {
    const auto& parts = comps[i].parts;
    if (parts.size() < 3) continue;
    for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
      Composition merged;
      merged.parts.reserve(parts.size() - 1);
      for (std::size_t j = 0; j < parts.size(); ++j) {
        if (j == k) {
          merged.parts.push_back(m.add(parts[k], parts[k + 1]));
          ++j;
        } else {
          merged.parts.push_back(parts[j]);
        }
      }
      const auto it = index.find(merged);
      if (it == index.end()) throw std::logic_error("merged composition not enumerated");
      covers.emplace_back(it->second, i);
    }
  }
  FinitePoset order(comps.size(), covers);
  return {lam, std::move(comps), std::move(order)};
}

std::vector<Element> partial_sum_chain(const Monoid& m, const Composition& c) {
  if (c.parts.size() < 2) throw std::invalid_argument("composition must have at least two parts");
  std::vector<Element> chain;
  Element acc = m.zero();
  for (std::size_t i = 0; i + 1 < c.parts.size(); ++i) {
    acc = m.add(acc, c.parts[i]);
    chain.push_back(acc);
  }
  return chain;
}

Composition composition_from_chain(const Monoid& m, const Element& lam,
                                   const std::vector<Element>& chain) {
  if (chain.empty()) throw std::invalid_argument("chain must be non-empty");
  Composition c;
  Element prev = m.zero();
  for (const auto& mu : chain) {
    const auto diff = m.subtract(mu, prev);
    if (!diff || diff->is_zero())
      throw std::invalid_argument("not a strictly increasing chain below lam");
    c.parts.push_back(*diff);
    prev = mu;
  }
  const auto last = m.subtract(lam, prev);
  if (!last || last->is_zero()) throw std::invalid_argument("chain does not sit below lam");
  c.parts.push_back(*last);
  return c;
}

}  // namespace frob
