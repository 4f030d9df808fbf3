#include <doctest.h>

#include <set>

#include "omegalab/constructions.hpp"
#include "omegalab/gen.hpp"
#include "omegalab/textio.hpp"

using namespace omegalab;

namespace {
const EPSet evens = EPSet::residues(2, {0});
const EPSet odds = EPSet::residues(2, {1});
const EPSet mult3 = EPSet::residues(3, {0});
const EPSet mult4 = EPSet::residues(4, {0});
}  // namespace

TEST_CASE("splitters from slaloms") {
  CHECK(splitter_from_slalom(QAFun::identity()) == evens);
  CHECK(splitter_from_slalom(QAFun::linear(2, 0)) == EPSet::residues(4, {0, 1}));
  EPSet s = splitter_from_slalom(QAFun::linear(3, 0));
  CHECK(s == EPSet::residues(6, {0, 1, 2}));
  CHECK(split_witness_check(std::vector<EPSet>{evens, mult3}, s));
  CHECK_THROWS_AS(splitter_from_slalom(QAFun::constant(2)), NotIncreasingError);
}

TEST_CASE("initial segments") {
  CHECK(first2n(EPSet::naturals(), 2) == std::vector<Nat>{0, 1, 2, 3});
  CHECK(first2n(evens, 2) == std::vector<Nat>{0, 2, 4, 6});
  CHECK(first2n(odds, 1) == std::vector<Nat>{1, 3});
  CHECK_THROWS_AS(first2n(EPSet::finite({1}), 1), FiniteSetError);
  CHECK_THROWS_AS(first2n(evens, 0), std::invalid_argument);
}

TEST_CASE("guesser answers from the scheduled strand") {
  GuesserProgram single = rothberger_guesser({EPSet::naturals()});
  CHECK(single.guess(3) == std::vector<Nat>{0, 1, 2, 3, 4, 5});

  GuesserProgram pair = rothberger_guesser({evens, odds});
  CHECK(pair.guess(2) == std::vector<Nat>{0, 2, 4, 6});
  CHECK(pair.guess(3) == std::vector<Nat>{1, 3, 5, 7, 9, 11});

  for (Nat n = 2; n <= 8; n += 2)
    CHECK(pair.guess(n) == first2n(evens, n));
}

TEST_CASE("greedy streams on one strand") {
  auto [I, J] = ij_from_guesser(rothberger_guesser({EPSet::naturals()}));
  CHECK(I.truncate(8) == std::vector<Nat>{0, 2, 4, 6});
  CHECK(J.truncate(8) == std::vector<Nat>{1, 3, 5, 7});

  auto [I2, J2] = ij_from_guesser(rothberger_guesser({evens}));
  CHECK(I2.truncate(13) == std::vector<Nat>{0, 4, 8, 12});
  CHECK(J2.truncate(11) == std::vector<Nat>{2, 6, 10});
}

TEST_CASE("greedy streams split every source") {
  GenParams p;
  p.seed = 13;
  for (Nat i = 0; i < 25; ++i) {
    std::vector<EPSet> family = gen_family(p, i);
    auto [I, J] = ij_from_guesser(rothberger_guesser(family));
    auto iv = I.truncate(800);
    auto jv = J.truncate(800);
    std::set<Nat> is(iv.begin(), iv.end());
    for (Nat v : jv) CHECK_FALSE(is.count(v));
    for (const EPSet& y : family) {
      Nat hits_i = 0, hits_j = 0;
      for (Nat v : iv) hits_i += y.member(v);
      for (Nat v : jv) hits_j += y.member(v);
      CHECK(hits_i > 2);
      CHECK(hits_j > 2);
    }
  }
}

TEST_CASE("starved guesser rounds are detected") {
  detail::GreedyPicker picker({EPSet::naturals()}, 1);
  CHECK_THROWS_AS(
      [&] {
        for (int i = 0; i < 10; ++i) picker.step();
      }(),
      ExhaustedChoiceError);
}

TEST_CASE("shifted composition") {
  CHECK(gtilde(QAFun::linear(3, 0), QAFun::linear(2, 0)) == QAFun::linear(6, 6));
  CHECK(gtilde(QAFun::identity(), QAFun::identity()) == QAFun::linear(1, 1));
  CHECK(gtilde(QAFun::linear(1, 1), QAFun::linear(3, 0)) == QAFun::linear(3, 4));
  CHECK_THROWS_AS(gtilde(QAFun::identity(), QAFun::constant(0)), NotIncreasingError);
}

TEST_CASE("bound transfer report") {
  std::vector<QAFun> family = {QAFun::identity()};
  BoundingReport r = bounding_reduction(family, QAFun::linear(3, 0), QAFun::linear(2, 0));
  CHECK(r.below_sets[0] == EPSet::naturals());
  CHECK(r.compressed[0] == EPSet::naturals());
  CHECK(r.tilde == QAFun::linear(6, 6));
  CHECK(r.tilde_below_sets[0] == EPSet::naturals());
  CHECK(r.verifies());
  CHECK(r.recheck());

  BoundingReport same = bounding_reduction(family, QAFun::identity(), QAFun::identity());
  CHECK(same.tilde == QAFun::linear(1, 1));
  CHECK(same.verifies());

  CHECK_THROWS_AS(
      bounding_reduction(std::vector<QAFun>{QAFun::linear(2, 0)}, QAFun::identity(),
                         QAFun::linear(2, 0)),
      WitnessInvalidError);
  CHECK_THROWS_AS(
      bounding_reduction(family, QAFun::identity(), QAFun::constant(0)),
      NotIncreasingError);
  CHECK_THROWS_AS(
      bounding_reduction(std::vector<QAFun>{QAFun::from_parts({9}, 1, {0})},
                         QAFun::linear(9, 9), QAFun::identity()),
      NotIncreasingError);
}

TEST_CASE("bound transfer verifies on random valid instances") {
  GenParams p;
  p.seed = 47;
  for (Nat i = 0; i < 60; ++i) {
    Rng rng = Rng::for_case(p.seed, i);
    Nat count = rng.range(1, 3);
    std::vector<QAFun> family;
    for (Nat j = 0; j < count; ++j)
      family.push_back(detail::gen_monotone_qafun_with(rng, p));
    QAFun g = add_constant(pointwise_max(family), rng.below(20));
    QAFun h = detail::gen_increasing_qafun_with(rng, p);
    BoundingReport r = bounding_reduction(family, g, h);
    CHECK(r.verifies());
    for (bool exact : r.exact_flags) CHECK(exact);
  }
}

TEST_CASE("maxfin closure") {
  QAFun f = QAFun::linear(2, 0), g = QAFun::linear(1, 10);
  auto closure = maxfin_closure(std::vector<QAFun>{f, g});
  CHECK(closure.size() == 3);
  auto single = maxfin_closure(std::vector<QAFun>{f});
  CHECK(single == std::vector<QAFun>{f});
  auto twice = maxfin_closure(closure);
  CHECK(std::set<QAFun>(twice.begin(), twice.end()) ==
        std::set<QAFun>(closure.begin(), closure.end()));
}

TEST_CASE("escape function clears the closure") {
  QAFun lone = QAFun::from_parts({7}, 3, {2, 4});
  CHECK(escape_function(std::vector<QAFun>{lone}) == add_constant(lone, 1));

  std::vector<QAFun> family = {QAFun::linear(2, 0), QAFun::linear(1, 10)};
  QAFun esc = escape_function(family);
  for (const QAFun& m : maxfin_closure(family)) {
    CHECK_FALSE(le_star(esc, m));
    CHECK(le_set(esc, m, false).empty());
  }
  GenParams p;
  p.seed = 53;
  for (Nat i = 0; i < 60; ++i) {
    Rng rng = Rng::for_case(p.seed, i);
    std::vector<QAFun> fam;
    Nat count = rng.range(1, 3);
    for (Nat j = 0; j < count; ++j) fam.push_back(detail::gen_qafun_with(rng, p));
    QAFun e = escape_function(fam);
    for (const QAFun& m : maxfin_closure(fam)) CHECK_FALSE(le_star(e, m));
  }
}

TEST_CASE("filter subbase from a bound witness") {
  FamilySpec one = filter_subbase_from_bound(std::vector<QAFun>{QAFun::identity()},
                                             QAFun::linear(2, 0));
  CHECK(one.generators == std::vector<EPSet>{EPSet::from_parts({}, 1, 1, {0})});
  CHECK(subbase_check(one));

  FamilySpec two = filter_subbase_from_bound(
      std::vector<QAFun>{QAFun::linear(2, 0), QAFun::linear(2, 1)}, QAFun::linear(3, 0));
  CHECK(two.generators.size() == 2);
  CHECK(subbase_check(two));
  CHECK(two.generators[0] == EPSet::from_parts({}, 1, 1, {0}));
  CHECK(two.generators[1] == EPSet::from_parts({}, 2, 1, {0}));

  CHECK_THROWS_AS(filter_subbase_from_bound(std::vector<QAFun>{QAFun::linear(2, 0)},
                                            QAFun::identity()),
                  WitnessInvalidError);
}

TEST_CASE("recursive slalom stream") {
  CHECK(recursive_slalom_stream({QAFun::identity()}).values(6) ==
        std::vector<Nat>{0, 1, 2, 3, 4, 5});
  CHECK(recursive_slalom_stream({QAFun::linear(2, 0)}).values(5) ==
        std::vector<Nat>{0, 1, 3, 7, 15});
  CHECK_THROWS_AS(recursive_slalom_stream({QAFun::constant(3)}), NotIncreasingError);

  // Slope-one families stay linear, so the full depth is representable.
  for (Nat c = 0; c < 8; ++c) {
    std::vector<QAFun> fam = {QAFun::linear(1, c), QAFun::linear(1, c / 2)};
    auto h = recursive_slalom_stream(fam).values(64);
    for (std::size_t n = 0; n + 1 < h.size(); ++n) {
      CHECK(h[n] < h[n + 1]);
      for (const QAFun& f : fam) {
        auto nxt = image_set(f).next_at_or_after(h[n]);
        REQUIRE(nxt.has_value());
        CHECK(*nxt < h[n + 1]);
      }
    }
  }

  // Steeper families blow past the representable range; walk as far as the
  // checked stream allows and verify what exists.
  GenParams p;
  p.seed = 59;
  for (Nat i = 0; i < 25; ++i) {
    Rng rng = Rng::for_case(p.seed, i);
    std::vector<QAFun> fam;
    Nat count = rng.range(1, 3);
    for (Nat j = 0; j < count; ++j) fam.push_back(detail::gen_increasing_qafun_with(rng, p));
    std::vector<Nat> h;
    try {
      h = recursive_slalom_stream(fam).values(64);
    } catch (const std::overflow_error&) {
      LazyFun stream = recursive_slalom_stream(fam);
      for (Nat take = 63; take > 0; --take) {
        try {
          h = stream.values(take);
          break;
        } catch (const std::overflow_error&) {
        }
      }
    }
    CHECK(h.size() >= 8);
    for (std::size_t n = 0; n + 1 < h.size(); ++n) {
      CHECK(h[n] < h[n + 1]);
      for (const QAFun& f : fam) {
        auto nxt = image_set(f).next_at_or_after(h[n]);
        REQUIRE(nxt.has_value());
        CHECK(*nxt < h[n + 1]);
      }
    }
  }
}

TEST_CASE("split theorem replay at generation scale") {
  GenParams p;
  p.seed = 61;
  for (Nat i = 0; i < 100; ++i) {
    std::vector<EPSet> fam = gen_family(p, i);
    QAFun h = build_slalom(fam);
    CHECK(split_witness_check(fam, splitter_from_slalom(h)));
  }
}
