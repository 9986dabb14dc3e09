#include <doctest.h>

#include <random>

#include "frob/errors.hpp"
#include "frob/homology.hpp"
#include "frob/monoid.hpp"
#include "frob/poset.hpp"

using namespace frob;

namespace {

using Pairs = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

FinitePoset random_poset(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution edge(p);
  Pairs pairs;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (edge(rng)) pairs.emplace_back(i, j);
  return FinitePoset(n, pairs);
}

}  // namespace

TEST_CASE("poset construction closes transitively and rejects cycles") {
  const FinitePoset p(3, {{0, 1}, {1, 2}});
  CHECK(p.less(0, 2));
  CHECK(p.cover_pairs() == Pairs{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(FinitePoset(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(FinitePoset(2, Pairs{{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(FinitePoset(2, Pairs{{0, 5}}), std::invalid_argument);
}

TEST_CASE("order complexes of small posets") {
  CHECK(order_complex(FinitePoset()).is_empty_complex());

  const FinitePoset antichain(2, {});
  const auto k = order_complex(antichain);
  CHECK(k.count(0) == 2);
  CHECK(k.count(1) == 0);

  // interval (0,6) of <2,3>: three vertices, one comparability
  const auto interval = Monoid::submonoid(1, {{2}, {3}}).open_interval(Element::vector_form({6}));
  const auto c = order_complex(interval.order);
  CHECK(c.count(0) == 3);
  CHECK(c.count(1) == 1);
  CHECK(c.simplex_count() == 4);
}

TEST_CASE("order complex respects the simplex cap") {
  const FinitePoset chain(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}});
  CHECK_THROWS_AS(order_complex(chain, 16), resource_error);
}

TEST_CASE("chain counting matches enumeration") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 25; ++trial) {
    const auto p = random_poset(rng, 8, 0.35);
    CHECK(p.chain_count() == BigInt(order_complex(p).simplex_count()));
  }
}

TEST_CASE("beat-point removal keeps known cores") {
  // a chain dismantles to a point
  const FinitePoset chain(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(chain.core_points().size() == 1);

  // interval (0,8) of <2,3> dismantles onto the four-element circle poset
  const auto m = Monoid::submonoid(1, {{2}, {3}});
  const auto i8 = m.open_interval(Element::vector_form({8}));
  CHECK(i8.elements.size() == 5);
  CHECK(i8.order.core_points().size() == 4);

  // an antichain has no beat points
  CHECK(FinitePoset(3, {}).core_points().size() == 3);
}

TEST_CASE("ordinal blocks split stacked antichains") {
  // two antichains of size two, every lower element under every upper one
  const FinitePoset p(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  const auto blocks = p.ordinal_blocks();
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == std::vector<std::uint32_t>{0, 1});
  CHECK(blocks[1] == std::vector<std::uint32_t>{2, 3});
  // its order complex is the join of two S^0, a circle
  CHECK(order_complex_betti(p, FieldChoice::rationals()) == BettiVector::delta(3));

  // a V splits as point + antichain; a fence does not split at all
  const FinitePoset v(3, {{0, 1}, {0, 2}});
  CHECK(v.ordinal_blocks().size() == 2);
  const FinitePoset fence(4, {{0, 2}, {1, 2}, {1, 3}});
  CHECK(fence.ordinal_blocks().size() == 1);
}

TEST_CASE("reduced pipeline agrees with literal chain enumeration") {
  HomologyOptions literal;
  literal.reduce_posets = false;
  std::mt19937 rng(7);
  const auto q = FieldChoice::rationals();
  const auto f2 = FieldChoice::prime_field(2);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = random_poset(rng, 9, trial % 2 ? 0.25 : 0.45);
    CHECK(order_complex_betti(p, q) == order_complex_betti(p, q, literal));
    CHECK(order_complex_betti(p, f2) == order_complex_betti(p, f2, literal));
  }
}

TEST_CASE("reduced pipeline agrees with the literal route on monoid intervals") {
  HomologyOptions literal;
  literal.reduce_posets = false;
  const auto q = FieldChoice::rationals();
  const auto m23 = Monoid::submonoid(1, {{2}, {3}});
  for (const auto& lam : m23.elements_up_to(14)) {
    if (lam.is_zero()) continue;
    const auto p = m23.open_interval(lam).order;
    CHECK(order_complex_betti(p, q) == order_complex_betti(p, q, literal));
  }
  const auto f2m = Monoid::free_monoid(2);
  for (const auto& lam : f2m.elements_up_to(6)) {
    if (lam.is_zero()) continue;
    const auto p = f2m.open_interval(lam).order;
    CHECK(order_complex_betti(p, q) == order_complex_betti(p, q, literal));
  }
}
