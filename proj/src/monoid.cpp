#include "frob/monoid.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace frob {

namespace {

struct ElementPairHash {
  std::size_t operator()(const std::pair<Element, Element>& p) const {
    return p.first.hash() * 0x9e3779b97f4a7c15ULL + p.second.hash();
  }
};

// membership of an ambient vector in the submonoid spanned by gens,
// by generator descent
bool vector_member(const std::vector<Element>& gens, const std::vector<std::int64_t>& v,
                   std::unordered_set<Element, ElementHash>& dead) {
  bool zero = true;
  for (auto c : v)
    if (c != 0) {
      zero = false;
      break;
    }
  if (zero) return true;
  const Element key = Element::vector_form(std::vector<std::int64_t>(v));
  if (dead.count(key)) return false;
  for (const auto& g : gens) {
    const auto& gc = g.coords();
    std::vector<std::int64_t> rest(v.size());
    bool ok = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      rest[i] = v[i] - gc[i];
      if (rest[i] < 0) {
        ok = false;
        break;
      }
    }
    if (ok && vector_member(gens, rest, dead)) return true;
  }
  dead.insert(key);
  return false;
}

}  // namespace

struct Monoid::Impl {
  Kind kind;
  std::int64_t rank_or_ambient = 0;
  std::vector<Element> generators;

  // glued kind
  std::optional<Monoid> left, right;
  Element rho1, rho2;
  std::int64_t hat1_weight = 1;  // degree weight of the left remainder = deg(rho2)
  std::int64_t hat2_weight = 1;  // degree weight of the right remainder = deg(rho1)
  std::int64_t rho_degree = 0;

  mutable std::mutex mu;
  mutable std::unordered_map<std::pair<Element, Element>, bool, ElementPairHash> divides_memo;
  mutable std::vector<Element> element_cache;  // sorted by (degree, form)
  mutable std::int64_t element_cache_bound = -1;
};

Monoid Monoid::free_monoid(std::int64_t rank) {
  if (rank < 0) throw std::invalid_argument("free monoid rank must be non-negative");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::free;
  impl->rank_or_ambient = rank;
  for (std::int64_t i = 0; i < rank; ++i) {
    std::vector<std::int64_t> unit(static_cast<std::size_t>(rank), 0);
    unit[static_cast<std::size_t>(i)] = 1;
    impl->generators.push_back(Element::vector_form(std::move(unit)));
  }
  return Monoid(std::move(impl));
}

Monoid Monoid::submonoid(std::int64_t ambient_rank, std::vector<std::vector<std::int64_t>> generators) {
  if (ambient_rank < 1) throw std::invalid_argument("submonoid ambient rank must be positive");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::submonoid;
  impl->rank_or_ambient = ambient_rank;
  std::vector<Element> gens;
  for (auto& g : generators) {
    if (static_cast<std::int64_t>(g.size()) != ambient_rank)
      throw std::invalid_argument("generator length does not match ambient rank");
    Element e = Element::vector_form(std::move(g));
    if (e.is_zero()) throw std::invalid_argument("submonoid generators must be nonzero");
    gens.push_back(std::move(e));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  impl->generators = std::move(gens);
  return Monoid(std::move(impl));
}

Monoid Monoid::glued(const Monoid& left, const Monoid& right, const Element& rho1,
                     const Element& rho2) {
  left.validate(rho1);
  right.validate(rho2);
  if (!left.is_reducible(rho1))
    throw std::invalid_argument("rho1 is not reducible in the left factor");
  if (!right.is_reducible(rho2))
    throw std::invalid_argument("rho2 is not reducible in the right factor");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::glued;
  impl->left = left;
  impl->right = right;
  impl->rho1 = rho1;
  impl->rho2 = rho2;
  impl->hat1_weight = right.degree(rho2);
  impl->hat2_weight = left.degree(rho1);
  impl->rho_degree = impl->hat1_weight * impl->hat2_weight;
  Monoid m(impl);
  // canonical images of the factor generators
  std::vector<Element> gens;
  for (const auto& g : left.generators()) gens.push_back(m.from_pair(g, right.zero()));
  for (const auto& g : right.generators()) gens.push_back(m.from_pair(left.zero(), g));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  impl->generators = std::move(gens);
  return m;
}

Monoid Monoid::adjoin_root(const Element& rho, std::int64_t r) const {
  if (r < 2) throw std::invalid_argument("adjoin_root requires r >= 2");
  return glued(*this, free_monoid(1), rho, Element::vector_form({r}));
}

Monoid Monoid::direct_sum(const Monoid& a, const Monoid& b) {
  if (a.kind() == Kind::glued || b.kind() == Kind::glued)
    throw std::invalid_argument("direct_sum requires vector-presented factors");
  const std::int64_t da = a.kind() == Kind::free ? a.rank() : a.ambient_rank();
  const std::int64_t db = b.kind() == Kind::free ? b.rank() : b.ambient_rank();
  if (a.kind() == Kind::free && b.kind() == Kind::free) return free_monoid(da + db);
  std::vector<std::vector<std::int64_t>> gens;
  for (const auto& g : a.generators()) {
    std::vector<std::int64_t> v = g.coords();
    v.resize(static_cast<std::size_t>(da + db), 0);
    gens.push_back(std::move(v));
  }
  for (const auto& g : b.generators()) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(da), 0);
    v.insert(v.end(), g.coords().begin(), g.coords().end());
    gens.push_back(std::move(v));
  }
  return submonoid(da + db, std::move(gens));
}

Monoid::Kind Monoid::kind() const { return impl_->kind; }

std::int64_t Monoid::rank() const {
  if (impl_->kind != Kind::free) throw std::logic_error("rank() on a non-free monoid");
  return impl_->rank_or_ambient;
}

std::int64_t Monoid::ambient_rank() const {
  if (impl_->kind != Kind::submonoid) throw std::logic_error("ambient_rank() on a non-submonoid");
  return impl_->rank_or_ambient;
}

const Monoid& Monoid::left() const {
  if (impl_->kind != Kind::glued) throw std::logic_error("left() on a non-glued monoid");
  return *impl_->left;
}

const Monoid& Monoid::right() const {
  if (impl_->kind != Kind::glued) throw std::logic_error("right() on a non-glued monoid");
  return *impl_->right;
}

const Element& Monoid::rho1() const {
  if (impl_->kind != Kind::glued) throw std::logic_error("rho1() on a non-glued monoid");
  return impl_->rho1;
}

const Element& Monoid::rho2() const {
  if (impl_->kind != Kind::glued) throw std::logic_error("rho2() on a non-glued monoid");
  return impl_->rho2;
}

Element Monoid::rho() const {
  if (impl_->kind != Kind::glued) throw std::logic_error("rho() on a non-glued monoid");
  return Element::glued_form(1, impl_->left->zero(), impl_->right->zero());
}

Element Monoid::zero() const {
  switch (impl_->kind) {
    case Kind::free:
    case Kind::submonoid:
      return Element::vector_form(
          std::vector<std::int64_t>(static_cast<std::size_t>(impl_->rank_or_ambient), 0));
    case Kind::glued:
      return Element::glued_form(0, impl_->left->zero(), impl_->right->zero());
  }
  throw std::logic_error("unreachable");
}

const std::vector<Element>& Monoid::generators() const { return impl_->generators; }

std::int64_t Monoid::degree(const Element& e) const {
  if (impl_->kind == Kind::glued) {
    return e.glue_count() * impl_->rho_degree +
           impl_->hat1_weight * impl_->left->degree(e.hat1()) +
           impl_->hat2_weight * impl_->right->degree(e.hat2());
  }
  std::int64_t d = 0;
  for (auto c : e.coords()) d += c;
  return d;
}

Element Monoid::add(const Element& a, const Element& b) const {
  if (impl_->kind == Kind::glued) {
    const Element s1 = impl_->left->add(a.hat1(), b.hat1());
    const Element s2 = impl_->right->add(a.hat2(), b.hat2());
    const Element c = from_pair(s1, s2);
    return Element::glued_form(a.glue_count() + b.glue_count() + c.glue_count(), c.hat1(),
                               c.hat2());
  }
  const auto& x = a.coords();
  const auto& y = b.coords();
  if (x.size() != y.size()) throw std::invalid_argument("adding elements of different shapes");
  std::vector<std::int64_t> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return Element::vector_form(std::move(out));
}

Element Monoid::scale(std::int64_t k, const Element& e) const {
  if (k < 0) throw std::invalid_argument("scale by a negative integer");
  Element acc = zero();
  for (std::int64_t i = 0; i < k; ++i) acc = add(acc, e);
  return acc;
}

bool Monoid::divides(const Element& a, const Element& b) const {
  if (a == b) return true;
  const std::int64_t da = degree(a), db = degree(b);
  if (da >= db) return false;
  const std::pair<Element, Element> key{a, b};
  {
    std::lock_guard<std::mutex> lk(impl_->mu);
    const auto it = impl_->divides_memo.find(key);
    if (it != impl_->divides_memo.end()) return it->second;
  }
  bool found = false;
  std::unordered_set<Element, ElementHash> visited{a};
  std::vector<Element> frontier{a};
  while (!frontier.empty() && !found) {
    std::vector<Element> next;
    for (const auto& x : frontier) {
      for (const auto& g : impl_->generators) {
        const Element y = add(x, g);
        const std::int64_t dy = degree(y);
        if (dy > db) continue;
        if (y == b) {
          found = true;
          break;
        }
        if (dy < db && visited.insert(y).second) next.push_back(y);
      }
      if (found) break;
    }
    frontier = std::move(next);
  }
  {
    std::lock_guard<std::mutex> lk(impl_->mu);
    impl_->divides_memo.emplace(key, found);
  }
  return found;
}

std::optional<Element> Monoid::subtract(const Element& b, const Element& a) const {
  if (!divides(a, b)) return std::nullopt;
  if (impl_->kind != Kind::glued) {
    const auto& x = b.coords();
    const auto& y = a.coords();
    std::vector<std::int64_t> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
    return Element::vector_form(std::move(out));
  }
  const std::int64_t dd = degree(b) - degree(a);
  for (const auto& mu : elements_up_to(dd)) {
    if (degree(mu) != dd) continue;
    if (add(a, mu) == b) return mu;
  }
  throw std::logic_error("subtract: divisible pair with no witness (cancellativity violated?)");
}

std::pair<std::int64_t, Element> Monoid::max_multiple(const Element& x, const Element& rho) const {
  if (rho.is_zero()) throw std::invalid_argument("max_multiple with rho = 0");
  std::int64_t l = 0;
  Element cur = x;
  while (auto next = subtract(cur, rho)) {
    cur = *next;
    ++l;
  }
  return {l, cur};
}

std::vector<Element> Monoid::elements_up_to(std::int64_t bound) const {
  if (bound < 0) return {};
  {
    std::lock_guard<std::mutex> lk(impl_->mu);
    if (bound <= impl_->element_cache_bound) {
      std::vector<Element> out;
      for (const auto& e : impl_->element_cache) {
        if (degree(e) > bound) break;
        out.push_back(e);
      }
      return out;
    }
  }
  std::unordered_set<Element, ElementHash> seen{zero()};
  std::vector<Element> frontier{zero()};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& x : frontier) {
      for (const auto& g : impl_->generators) {
        Element y = add(x, g);
        if (degree(y) <= bound && seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Element> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [this](const Element& a, const Element& b) {
    const std::int64_t da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return a < b;
  });
  {
    std::lock_guard<std::mutex> lk(impl_->mu);
    if (bound > impl_->element_cache_bound) {
      impl_->element_cache = out;
      impl_->element_cache_bound = bound;
    }
  }
  return out;
}

OpenInterval Monoid::open_interval(const Element& lam) const {
  if (lam.is_zero()) throw std::invalid_argument("open_interval of the zero element");
  const std::int64_t top = degree(lam);
  std::vector<Element> kept;
  for (const auto& mu : elements_up_to(top - 1)) {
    if (mu.is_zero()) continue;
    if (divides(mu, lam)) kept.push_back(mu);
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < kept.size(); ++i) {
    for (std::uint32_t j = 0; j < kept.size(); ++j) {
      if (i == j || degree(kept[i]) >= degree(kept[j])) continue;
      if (divides(kept[i], kept[j])) pairs.emplace_back(i, j);
    }
  }
  FinitePoset order(kept.size(), pairs);
  return {std::move(kept), std::move(order)};
}

bool Monoid::is_reducible(const Element& rho) const {
  if (rho.is_zero()) return false;
  for (const auto& mu : elements_up_to(degree(rho) - 1)) {
    if (mu.is_zero()) continue;
    if (divides(mu, rho)) return true;
  }
  return false;
}

Element Monoid::from_pair(const Element& x1, const Element& x2) const {
  if (impl_->kind != Kind::glued) throw std::logic_error("from_pair on a non-glued monoid");
  const auto [l1, h1] = impl_->left->max_multiple(x1, impl_->rho1);
  const auto [l2, h2] = impl_->right->max_multiple(x2, impl_->rho2);
  return Element::glued_form(l1 + l2, h1, h2);
}

bool Monoid::is_valid(const Element& e) const {
  try {
    validate(e);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

void Monoid::validate(const Element& e) const {
  switch (impl_->kind) {
    case Kind::free:
      if (!e.is_vector()) throw std::invalid_argument("expected an exponent vector");
      if (static_cast<std::int64_t>(e.coords().size()) != impl_->rank_or_ambient)
        throw std::invalid_argument("exponent vector length does not match rank");
      return;
    case Kind::submonoid: {
      if (!e.is_vector()) throw std::invalid_argument("expected an ambient vector");
      if (static_cast<std::int64_t>(e.coords().size()) != impl_->rank_or_ambient)
        throw std::invalid_argument("ambient vector length does not match ambient rank");
      std::unordered_set<Element, ElementHash> dead;
      if (!vector_member(impl_->generators, e.coords(), dead))
        throw std::invalid_argument("vector is not generated by the submonoid generators");
      return;
    }
    case Kind::glued: {
      if (!e.is_glued()) throw std::invalid_argument("expected a glued triple");
      impl_->left->validate(e.hat1());
      impl_->right->validate(e.hat2());
      if (impl_->left->divides(impl_->rho1, e.hat1()))
        throw std::invalid_argument("hat1 is above rho1; triple is not canonical");
      if (impl_->right->divides(impl_->rho2, e.hat2()))
        throw std::invalid_argument("hat2 is above rho2; triple is not canonical");
      return;
    }
  }
}

std::string Monoid::describe() const {
  std::ostringstream os;
  switch (impl_->kind) {
    case Kind::free:
      os << "free(" << impl_->rank_or_ambient << ")";
      break;
    case Kind::submonoid: {
      os << "submonoid(N^" << impl_->rank_or_ambient << "; ";
      for (std::size_t i = 0; i < impl_->generators.size(); ++i) {
        if (i) os << ", ";
        os << impl_->generators[i].to_string();
      }
      os << ")";
      break;
    }
    case Kind::glued:
      os << "glued(" << impl_->left->describe() << " at " << impl_->rho1.to_string() << ", "
         << impl_->right->describe() << " at " << impl_->rho2.to_string() << ")";
      break;
  }
  return os.str();
}

}  // namespace frob
