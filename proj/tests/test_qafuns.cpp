#include <doctest.h>

#include "brute.hpp"
#include "omegalab/gen.hpp"
#include "omegalab/lazy.hpp"
#include "omegalab/qafun.hpp"

using namespace omegalab;

TEST_CASE("evaluation") {
  CHECK(QAFun::linear(3, 1).eval(4) == 13);
  QAFun f = QAFun::from_parts({5}, 2, {7});
  CHECK(f.eval(0) == 5);
  CHECK(f.eval(1) == 7);
  CHECK(f.eval(3) == 11);  // 7 + 2*2
  CHECK(QAFun::constant(9).eval(123) == 9);
}

TEST_CASE("canonical form absorbs redundant structure") {
  CHECK(QAFun::from_parts({0}, 1, {1}) == QAFun::identity());
  CHECK(QAFun::from_parts({}, 4, {0, 2}) == QAFun::linear(2, 0));
  CHECK(QAFun::from_parts({}, 0, {3, 3}) == QAFun::constant(3));
  CHECK_THROWS_AS(QAFun::from_parts({}, 1, {}), std::invalid_argument);
}

TEST_CASE("monotonicity predicates") {
  CHECK(QAFun::linear(1, 0).increasing());
  CHECK_FALSE(QAFun::constant(4).increasing());
  CHECK(QAFun::constant(4).nondecreasing());
  CHECK_FALSE(QAFun::from_parts({9}, 1, {0}).nondecreasing());
  // Wrap gap matters: base rises but the next period restarts too low.
  CHECK_FALSE(QAFun::from_parts({}, 1, {0, 5}).increasing());
  CHECK(QAFun::from_parts({}, 6, {0, 5}).increasing());
}

TEST_CASE("compose stays exact") {
  CHECK(compose(QAFun::linear(3, 1), QAFun::linear(2, 0)) == QAFun::linear(6, 1));
  QAFun f = QAFun::from_parts({}, 4, {0, 3});
  QAFun c = compose(QAFun::linear(2, 0), f);
  CHECK(c == QAFun::from_parts({}, 8, {0, 6}));
  for (Nat n = 0; n < 200; ++n) CHECK(c.eval(n) == 2 * f.eval(n));
  CHECK(compose(QAFun::identity(), f) == f);
  CHECK(compose(f, QAFun::identity()) == f);
}

TEST_CASE("pointwise max") {
  QAFun two_n = QAFun::linear(2, 0);
  QAFun n_plus = QAFun::linear(1, 10);
  QAFun m = pointwise_max(std::vector<QAFun>{two_n, n_plus});
  for (Nat n = 0; n < 100; ++n) CHECK(m.eval(n) == std::max(2 * n, n + 10));
  CHECK(pointwise_max(std::vector<QAFun>{two_n}) == two_n);
  CHECK(pointwise_max(std::vector<QAFun>{two_n, QAFun::linear(2, 1)}) ==
        QAFun::linear(2, 1));
  CHECK_THROWS_AS(pointwise_max(std::vector<QAFun>{}), std::invalid_argument);
}

TEST_CASE("eventual domination") {
  CHECK(le_star(QAFun::linear(2, 0), QAFun::linear(3, 0)));
  CHECK_FALSE(le_star(QAFun::linear(3, 0), QAFun::linear(2, 0)));
  CHECK_FALSE(le_star(QAFun::linear(1, 10), QAFun::linear(1, 5)));
  CHECK(le_star(QAFun::linear(1, 5), QAFun::linear(1, 10)));
}

TEST_CASE("comparison sets") {
  CHECK(le_set(QAFun::linear(2, 0), QAFun::linear(1, 5), false) ==
        EPSet::finite({0, 1, 2, 3, 4, 5}));
  CHECK(le_set(QAFun::identity(), QAFun::linear(2, 0), false) == EPSet::naturals());
  CHECK(le_set(QAFun::identity(), QAFun::linear(2, 0), true) ==
        EPSet::from_parts({}, 1, 1, {0}));
  CHECK(equal_set(QAFun::identity(), QAFun::linear(2, 0)) == EPSet::finite({0}));
}

TEST_CASE("strand interleavings") {
  StrandFun g({QAFun::identity(), QAFun::linear(2, 0)});
  CHECK(g.eval(3) == 6);
  CHECK(g.eval(4) == 4);
  CHECK(eq_infinitely_often(g, QAFun::identity()));
  CHECK_FALSE(eq_infinitely_often(g, QAFun::linear(3, 0)));
  CHECK(eq_infinitely_often(StrandFun({QAFun::linear(5, 2)}), QAFun::linear(5, 2)));
  CHECK_THROWS_AS(StrandFun({}), std::invalid_argument);
}

TEST_CASE("image and enumeration") {
  CHECK(image_set(QAFun::linear(2, 0)) == EPSet::residues(2, {0}));
  CHECK(image_set(QAFun::linear(3, 1)) == EPSet::residues(3, {1}));
  CHECK_THROWS_AS(image_set(QAFun::constant(1)), NotIncreasingError);
  CHECK(enumeration(EPSet::residues(2, {0})) == QAFun::linear(2, 0));
  CHECK(enumeration(EPSet::residues(2, {1})) == QAFun::linear(2, 1));
  CHECK(enumeration(EPSet::residues(6, {0, 1})) == QAFun::from_parts({}, 6, {0, 1}));
  CHECK_THROWS_AS(enumeration(EPSet::finite({1})), FiniteSetError);

  GenParams p;
  p.seed = 11;
  for (Nat i = 0; i < 100; ++i) {
    EPSet a = gen_epset(p, i);
    CHECK(image_set(enumeration(a)) == a);
  }
}

TEST_CASE("member_set tracks values through a set") {
  // {n : 2n in mult4} = evens.
  CHECK(member_set(QAFun::linear(2, 0), EPSet::residues(4, {0})) == EPSet::residues(2, {0}));
  GenParams p;
  p.seed = 3;
  for (Nat i = 0; i < 100; ++i) {
    QAFun f = gen_qafun(p, i);
    EPSet a = gen_epset(p, i + 1000);
    EPSet got = member_set(f, a);
    for (Nat n = 0; n < 300; ++n) CHECK(got.member(n) == a.member(f.eval(n)));
  }
}

TEST_CASE("progressions and shifts") {
  CHECK(shift(QAFun::linear(2, 0), 1) == QAFun::linear(2, 2));
  CHECK(restrict_progression(QAFun::linear(3, 1), 2, 4) == QAFun::linear(12, 7));
  QAFun f = QAFun::from_parts({4, 9}, 5, {1, 2, 8});
  QAFun r = restrict_progression(f, 1, 2);
  for (Nat t = 0; t < 120; ++t) CHECK(r.eval(t) == f.eval(1 + 2 * t));
  CHECK(add_constant(f, 3).eval(0) == 7);
}

TEST_CASE("point-to-set stream") {
  CHECK(baire_to_roth(QAFun::constant(0)).truncate(5) == std::vector<Nat>{0, 1, 2, 3, 4});
  CHECK(baire_to_roth(QAFun::constant(1)).truncate(10) == std::vector<Nat>{1, 3, 5, 7, 9});
  CHECK(baire_to_roth(QAFun::identity()).truncate(15) == std::vector<Nat>{0, 2, 5, 9, 14});
  CHECK(baire_to_roth(QAFun::identity()).truncate(0).empty());
  // f = (0,1,1,1,...) makes the partial-sum stream enumerate the evens.
  CHECK(baire_to_roth(QAFun::from_parts({0}, 0, {1})).truncate(5) ==
        std::vector<Nat>{0, 2, 4});
  GenParams p;
  p.seed = 19;
  for (Nat i = 0; i < 50; ++i) {
    QAFun f = gen_qafun(p, i);
    auto v = baire_to_roth(f).truncate(10000);
    for (std::size_t k = 0; k + 1 < v.size(); ++k) CHECK(v[k] < v[k + 1]);
  }
}

TEST_CASE("stream budget") {
  LazySet slow = baire_to_roth(QAFun::constant(0)).with_budget(4);
  CHECK_THROWS_AS(slow.truncate(100), BudgetExceededError);
  CHECK(slow.truncate(3) == std::vector<Nat>{0, 1, 2});
}

TEST_CASE("le_star is transitive on random triples") {
  GenParams p;
  p.seed = 23;
  for (Nat i = 0; i < 200; ++i) {
    QAFun f = gen_qafun(p, 3 * i), g = gen_qafun(p, 3 * i + 1), h = gen_qafun(p, 3 * i + 2);
    if (le_star(f, g) && le_star(g, h)) CHECK(le_star(f, h));
  }
}
