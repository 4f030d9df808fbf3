#include <doctest.h>

#include "omegalab/gen.hpp"
#include "omegalab/textio.hpp"

using namespace omegalab;

TEST_CASE("canonical text forms") {
  EPSet evens = EPSet::residues(2, {0});
  CHECK(serialize(evens) == "ep(prefix=[],start=0,period=2,pattern=[0])");
  CHECK(parse_epset(serialize(evens)) == evens);

  QAFun f = parse_qafun("qa(table=[],period=1,incr=2,base=[0])");
  CHECK(f == QAFun::linear(2, 0));
  CHECK(serialize(f) == "qa(table=[],period=1,incr=2,base=[0])");

  EPSet mixed = EPSet::from_parts({0, 3}, 5, 3, {1});
  CHECK(parse_epset(serialize(mixed)) == mixed);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_epset("ep(prefix=[],start=0,period=0,pattern=[])"), ParseError);
  CHECK_THROWS_AS(parse_epset("ep(prefix=[],start=0,period=2)"), ParseError);
  CHECK_THROWS_AS(parse_epset("ep(prefix=[],start=0,period=2,pattern=[0]) junk"), ParseError);
  CHECK_THROWS_AS(parse_qafun("qa(table=[],period=2,incr=1,base=[0])"), ParseError);
  CHECK_THROWS_AS(parse_qafun("qa(table=[],period=1,incr=1,base=[99999999999999999999])"),
                  ParseError);
  try {
    parse_epset("ep(prefix=[],start=x,period=1,pattern=[0])");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.column > 1);
  }
}

TEST_CASE("strand text form") {
  StrandFun g({QAFun::identity(), QAFun::linear(2, 0)});
  CHECK(serialize(g) ==
        "strands[qa(table=[],period=1,incr=1,base=[0]);qa(table=[],period=1,incr=2,base=[0])]");
  CHECK(parse_strandfun(serialize(g)) == g);
}

TEST_CASE("family documents") {
  std::string text =
      "# fixture\n"
      "[generators]\n"
      "claim: filter-base\n"
      "ep(prefix=[],start=0,period=2,pattern=[0])\n"
      "\n"
      "ep(prefix=[],start=0,period=4,pattern=[0])\n"
      "[tests]\n"
      "ep(prefix=[],start=0,period=3,pattern=[0])\n";
  FamilyDocument doc = parse_family_document(text);
  CHECK(doc.family.claim == FamilySpec::Claim::FilterBase);
  CHECK(doc.family.generators.size() == 2);
  REQUIRE(doc.battery.has_value());
  CHECK(doc.battery->tests.size() == 1);
  CHECK(parse_family_document(serialize(doc)) == doc);

  CHECK_THROWS_AS(parse_family_document("ep(prefix=[],start=0,period=2,pattern=[0])\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_family_document("[generators]\n"), ParseError);
  CHECK_THROWS_AS(
      parse_family_document("[generators]\nep(prefix=[1],start=2,period=1,pattern=[])\n"),
      ParseError);
}

TEST_CASE("cover documents") {
  std::string single =
      "[points]\n"
      "x: ep(prefix=[],start=0,period=2,pattern=[0])\n"
      "y: ep(prefix=[],start=0,period=2,pattern=[1])\n";
  CoverSequence seq = parse_cover_document(single);
  CHECK(seq.length() == 1);
  CHECK(seq.points() == std::vector<std::string>{"x", "y"});
  CHECK(parse_cover_document(serialize(seq)) == seq);

  std::string cyclic =
      "[cover 0]\n"
      "x: ep(prefix=[],start=0,period=2,pattern=[0])\n"
      "[cover 1]\n"
      "x: ep(prefix=[],start=0,period=2,pattern=[1])\n";
  CoverSequence two = parse_cover_document(cyclic);
  CHECK(two.length() == 2);
  CHECK(parse_cover_document(serialize(two)) == two);

  CHECK_THROWS_AS(parse_cover_document("[cover 1]\nx: ep(prefix=[],start=0,period=1,pattern=[0])\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_cover_document("[points]\n[cover 0]\nx: ep(prefix=[],start=0,period=1,pattern=[0])\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_cover_document("x: ep(prefix=[],start=0,period=1,pattern=[0])\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_cover_document("[points]\nx ep(prefix=[],start=0,period=1,pattern=[0])\n"),
                  ParseError);
}

TEST_CASE("truncation records") {
  LazyTruncation t = take_truncation(baire_to_roth(QAFun::constant(1)), 10);
  CHECK(t.elements == std::vector<Nat>{1, 3, 5, 7, 9});
  CHECK(t.name == "baire_to_roth");
  std::string text = serialize(t);
  CHECK(parse_truncation(text) == t);
  CHECK_THROWS_AS(parse_truncation("trunc(name=x,depth=4,params={},elements=[5])"), ParseError);
  CHECK_THROWS_AS(parse_truncation("trunc(name=x,depth=9,params={},elements=[5,5])"), ParseError);
}

TEST_CASE("json mirrors") {
  GenParams p;
  p.seed = 83;
  for (Nat i = 0; i < 50; ++i) {
    EPSet a = gen_epset(p, i);
    QAFun f = gen_qafun(p, i);
    CHECK(epset_from_json(to_json(a)) == a);
    CHECK(qafun_from_json(to_json(f)) == f);
  }
  EPSet evens = EPSet::residues(2, {0});
  nlohmann::json j = to_json(evens);
  CHECK(j["start"] == 0);
  CHECK(j["period"] == 2);
  CHECK(j["pattern"] == nlohmann::json::array({0}));
}
