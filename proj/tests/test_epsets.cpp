#include <doctest.h>

#include "brute.hpp"
#include "omegalab/epset.hpp"
#include "omegalab/gen.hpp"

using namespace omegalab;

namespace {
const EPSet evens = EPSet::residues(2, {0});
const EPSet odds = EPSet::residues(2, {1});
const EPSet mult3 = EPSet::residues(3, {0});
const EPSet mult4 = EPSet::residues(4, {0});
const EPSet mult6 = EPSet::residues(6, {0});
const EPSet nat = EPSet::naturals();
}  // namespace

TEST_CASE("membership follows the defining formula") {
  CHECK(evens.member(4));
  CHECK_FALSE(evens.member(3));
  EPSet s = EPSet::from_parts({1}, 2, 3, {0});
  CHECK(s.member(5));  // (5 - 2) mod 3 == 0
  CHECK(s.member(1));
  CHECK_FALSE(s.member(0));
  CHECK_FALSE(s.member(4));
}

TEST_CASE("canonical form minimizes period and start") {
  CHECK(EPSet::from_parts({}, 0, 4, {0, 2}) == evens);
  CHECK(EPSet::from_parts(evens.prefix(), evens.start(), evens.period(), evens.pattern()) ==
        evens);
  // Prefix absorbed into the tail.
  CHECK(EPSet::from_parts({0}, 1, 2, {1}) == evens);
  // Start cannot shrink when the boundary membership disagrees.
  EPSet tail = EPSet::from_parts({}, 4, 2, {0});  // evens from 4 on
  CHECK(tail.start() == 3);
  CHECK_FALSE(tail.member(2));
  CHECK(tail.member(4));
}

TEST_CASE("construction validates fields") {
  CHECK_THROWS_AS(EPSet::from_parts({}, 0, 0, {}), std::invalid_argument);
  CHECK_THROWS_AS(EPSet::from_parts({3}, 2, 2, {0}), std::invalid_argument);
  CHECK_THROWS_AS(EPSet::from_parts({}, 0, 2, {2}), std::invalid_argument);
}

TEST_CASE("boolean algebra on named sets") {
  CHECK(intersect(evens, mult3) == mult6);
  CHECK(brute::sets_agree_below(intersect(evens, mult3), mult6, 60));
  CHECK(intersect(evens, odds).empty());
  CHECK(unite(evens, odds) == nat);
  CHECK(unite(evens, mult4) == evens);
  CHECK(complement(evens) == odds);
  CHECK(complement(nat).empty());
  EPSet from5 = EPSet::from_parts({}, 5, 1, {0});
  CHECK(complement(from5) == EPSet::finite({0, 1, 2, 3, 4}));
}

TEST_CASE("identity elements") {
  GenParams p;
  p.seed = 7;
  for (Nat i = 0; i < 20; ++i) {
    EPSet a = gen_epset(p, i);
    CHECK(intersect(a, nat) == a);
    CHECK(unite(a, EPSet()) == a);
  }
}

TEST_CASE("almost inclusion") {
  CHECK(almost_subset(evens, nat));
  CHECK_FALSE(almost_subset(evens, odds));
  EPSet noisy = unite(EPSet::finite({0, 1}), mult4);
  CHECK(almost_subset(noisy, mult4));
  CHECK_FALSE(almost_subset(mult4, mult6));
}

TEST_CASE("cofiniteness") {
  CHECK(is_cofinite(EPSet::from_parts({}, 3, 1, {0})));
  CHECK_FALSE(is_cofinite(evens));
  CHECK(is_cofinite(EPSet::residues(1, {0})));
  CHECK_FALSE(is_cofinite(EPSet::finite({1, 2})));
}

TEST_CASE("tail gap bound") {
  CHECK(evens.tail_gap_bound() == 2);
  CHECK(EPSet::residues(6, {0, 1}).tail_gap_bound() == 5);
  CHECK(nat.tail_gap_bound() == 1);
  CHECK_THROWS_AS(EPSet::finite({1}).tail_gap_bound(), FiniteSetError);
}

TEST_CASE("element access") {
  CHECK(evens.nth(3) == 6);
  CHECK(EPSet::from_parts({1}, 2, 3, {0}).nth(0) == 1);
  CHECK(EPSet::from_parts({1}, 2, 3, {0}).nth(2) == 5);
  CHECK_THROWS_AS(EPSet::finite({1, 2}).nth(2), FiniteSetError);
  CHECK(evens.count_below(7) == 4);
  CHECK(evens.elements_below(7) == std::vector<Nat>{0, 2, 4, 6});
  CHECK(*evens.next_at_or_after(3) == 4);
  CHECK(*evens.next_at_or_after(4) == 4);
  CHECK_FALSE(EPSet::finite({3}).next_at_or_after(4).has_value());
}

TEST_CASE("random algebra agrees with brute force") {
  GenParams p;
  p.seed = 42;
  for (Nat i = 0; i < 200; ++i) {
    EPSet a = gen_epset(p, 2 * i);
    EPSet b = gen_epset(p, 2 * i + 1);
    Nat window = 2 * (std::max(a.start(), b.start()) + lcm_checked(a.period(), b.period())) + 64;
    EPSet meet = intersect(a, b), join = unite(a, b), diff = difference(a, b);
    for (Nat n = 0; n < window; ++n) {
      CHECK(meet.member(n) == (a.member(n) && b.member(n)));
      CHECK(join.member(n) == (a.member(n) || b.member(n)));
      CHECK(diff.member(n) == (a.member(n) && !b.member(n)));
    }
    CHECK(complement(unite(a, b)) == intersect(complement(a), complement(b)));
    bool brute_almost = true;
    for (Nat n = window / 2; n < window; ++n)
      if (a.member(n) && !b.member(n)) brute_almost = false;
    CHECK(almost_subset(a, b) == brute_almost);
  }
}

TEST_CASE("predicate builder honors its proof obligation") {
  EPSet s = EPSet::from_eventual_predicate([](Nat n) { return n % 3 == 1 || n == 0; }, 2, 3);
  CHECK(s.member(0));
  CHECK(s.member(1));
  CHECK(s.member(4));
  CHECK_FALSE(s.member(3));
}
