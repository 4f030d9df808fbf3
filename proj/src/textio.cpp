#include "omegalab/textio.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace omegalab {

namespace {

std::string join(const std::vector<Nat>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

// Minimal cursor over a one-line value expression. Errors carry the 1-based
// line/column computed from the original text.
struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, msg);
  }

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      fail(std::string("expected '") + c + "'");
    ++pos;
  }

  void expect_word(std::string_view w) {
    skip_ws();
    if (text.substr(pos, w.size()) != w) fail("expected '" + std::string(w) + "'");
    pos += w.size();
  }

  Nat number() {
    skip_ws();
    if (pos >= text.size() || !isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a number");
    Nat v = 0;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) {
      Nat d = text[pos] - '0';
      if (v > (std::numeric_limits<Nat>::max() - d) / 10) fail("number too large");
      v = v * 10 + d;
      ++pos;
    }
    return v;
  }

  std::vector<Nat> number_list() {
    expect('[');
    std::vector<Nat> out;
    if (!peek_is(']')) {
      out.push_back(number());
      while (peek_is(',')) {
        expect(',');
        out.push_back(number());
      }
    }
    expect(']');
    return out;
  }

  std::string word() {
    skip_ws();
    std::size_t begin = pos;
    while (pos < text.size() &&
           (isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
            text[pos] == '-'))
      ++pos;
    if (pos == begin) fail("expected an identifier");
    return std::string(text.substr(begin, pos - begin));
  }

  void end() {
    skip_ws();
    if (pos != text.size()) fail("trailing input");
  }
};

EPSet parse_epset_at(Cursor& c) {
  c.expect_word("ep");
  c.expect('(');
  c.expect_word("prefix=");
  auto prefix = c.number_list();
  c.expect(',');
  c.expect_word("start=");
  Nat start = c.number();
  c.expect(',');
  c.expect_word("period=");
  Nat period = c.number();
  c.expect(',');
  c.expect_word("pattern=");
  auto pattern = c.number_list();
  c.expect(')');
  try {
    return EPSet::from_parts(std::move(prefix), start, period, std::move(pattern));
  } catch (const std::invalid_argument& e) {
    c.fail(e.what());
  }
}

QAFun parse_qafun_at(Cursor& c) {
  c.expect_word("qa");
  c.expect('(');
  c.expect_word("table=");
  auto table = c.number_list();
  c.expect(',');
  c.expect_word("period=");
  Nat period = c.number();
  c.expect(',');
  c.expect_word("incr=");
  Nat incr = c.number();
  c.expect(',');
  c.expect_word("base=");
  auto base = c.number_list();
  c.expect(')');
  if (period != base.size()) c.fail("period does not match base length");
  try {
    return QAFun::from_parts(std::move(table), incr, std::move(base));
  } catch (const std::invalid_argument& e) {
    c.fail(e.what());
  }
}

}  // namespace

std::string serialize(const EPSet& a) {
  return "ep(prefix=[" + join(a.prefix()) + "],start=" + std::to_string(a.start()) +
         ",period=" + std::to_string(a.period()) + ",pattern=[" + join(a.pattern()) + "])";
}

std::string serialize(const QAFun& f) {
  return "qa(table=[" + join(f.table()) + "],period=" + std::to_string(f.period()) +
         ",incr=" + std::to_string(f.incr()) + ",base=[" + join(f.base()) + "])";
}

std::string serialize(const StrandFun& g) {
  std::string out = "strands[";
  for (std::size_t i = 0; i < g.strand_count(); ++i) {
    if (i) out += ";";
    out += serialize(g.strand(i));
  }
  return out + "]";
}

std::string serialize(const FamilySpec& f) {
  std::string out = "[generators]\n";
  if (f.claim != FamilySpec::Claim::None)
    out += std::string("claim: ") + to_string(f.claim) + "\n";
  for (const EPSet& g : f.generators) out += serialize(g) + "\n";
  return out;
}

std::string serialize(const TestBattery& b) {
  std::string out = "[tests]\n";
  for (const EPSet& t : b.tests) out += serialize(t) + "\n";
  return out;
}

EPSet parse_epset(std::string_view text) {
  Cursor c{text};
  EPSet a = parse_epset_at(c);
  c.end();
  return a;
}

QAFun parse_qafun(std::string_view text) {
  Cursor c{text};
  QAFun f = parse_qafun_at(c);
  c.end();
  return f;
}

StrandFun parse_strandfun(std::string_view text) {
  Cursor c{text};
  c.expect_word("strands");
  c.expect('[');
  std::vector<QAFun> strands;
  strands.push_back(parse_qafun_at(c));
  while (c.peek_is(';')) {
    c.expect(';');
    strands.push_back(parse_qafun_at(c));
  }
  c.expect(']');
  c.end();
  return StrandFun(std::move(strands));
}

LazyTruncation take_truncation(const LazySet& s, Nat depth) {
  return {s.name(), s.params(), depth, s.truncate(depth)};
}

std::string serialize(const LazyTruncation& t) {
  return "trunc(name=" + t.name + ",depth=" + std::to_string(t.depth) + ",params={" +
         t.params + "},elements=[" + join(t.elements) + "])";
}

LazyTruncation parse_truncation(std::string_view text) {
  Cursor c{text};
  c.expect_word("trunc");
  c.expect('(');
  c.expect_word("name=");
  LazyTruncation t;
  t.name = c.word();
  c.expect(',');
  c.expect_word("depth=");
  t.depth = c.number();
  c.expect(',');
  c.expect_word("params=");
  c.expect('{');
  std::size_t start = c.pos;
  while (c.pos < text.size() && text[c.pos] != '}') ++c.pos;
  t.params = std::string(text.substr(start, c.pos - start));
  c.expect('}');
  c.expect(',');
  c.expect_word("elements=");
  t.elements = c.number_list();
  c.expect(')');
  c.end();
  for (std::size_t i = 0; i + 1 < t.elements.size(); ++i)
    if (t.elements[i] >= t.elements[i + 1]) c.fail("truncation elements must increase");
  if (!t.elements.empty() && t.elements.back() >= t.depth)
    c.fail("truncation element beyond depth");
  return t;
}

namespace {

// Shared line scanner for family and cover documents.
struct Lines {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line_no = 0;

  std::optional<std::pair<std::size_t, std::string>> next() {
    while (pos < text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      std::string line(text.substr(pos, eol - pos));
      pos = eol + (eol < text.size() ? 1 : 0);
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
        line.pop_back();
      std::size_t begin = line.find_first_not_of(" \t");
      if (begin == std::string::npos) continue;
      return std::make_pair(line_no, line.substr(begin));
    }
    return std::nullopt;
  }
};

EPSet parse_epset_line(std::size_t line_no, const std::string& s) {
  try {
    return parse_epset(s);
  } catch (const ParseError& e) {
    throw ParseError(line_no, e.column, "in set literal: " + s);
  }
}

}  // namespace

FamilyDocument parse_family_document(std::string_view text) {
  Lines lines{text};
  std::vector<EPSet> gens;
  std::vector<EPSet> tests;
  FamilySpec::Claim claim = FamilySpec::Claim::None;
  enum { Outside, Generators, Tests } section = Outside;
  bool has_tests = false;

  while (auto entry = lines.next()) {
    auto& [no, line] = *entry;
    if (line == "[generators]") {
      section = Generators;
    } else if (line == "[tests]") {
      section = Tests;
      has_tests = true;
    } else if (line.rfind("claim:", 0) == 0) {
      if (section != Generators) throw ParseError(no, 1, "claim outside [generators]");
      std::string value = line.substr(6);
      value.erase(0, value.find_first_not_of(" \t"));
      auto parsed = claim_from_string(value);
      if (!parsed) throw ParseError(no, 1, "unknown claim: " + value);
      claim = *parsed;
    } else if (section == Generators) {
      gens.push_back(parse_epset_line(no, line));
    } else if (section == Tests) {
      tests.push_back(parse_epset_line(no, line));
    } else {
      throw ParseError(no, 1, "content before [generators]");
    }
  }
  if (gens.empty()) throw ParseError(lines.line_no, 1, "no generators");
  FamilyDocument doc;
  try {
    doc.family = FamilySpec::of(std::move(gens), claim);
    if (has_tests) doc.battery = TestBattery::of(std::move(tests));
  } catch (const Error& e) {
    throw ParseError(lines.line_no, 1, e.what());
  }
  return doc;
}

std::string serialize(const FamilyDocument& doc) {
  std::string out = serialize(doc.family);
  if (doc.battery) out += serialize(*doc.battery);
  return out;
}

CoverSequence parse_cover_document(std::string_view text) {
  Lines lines{text};
  std::vector<CoverTrace> covers;
  std::vector<std::pair<std::string, EPSet>> current;
  bool in_block = false;
  Nat expected_index = 0;
  bool single = false;

  auto flush = [&](std::size_t no) {
    if (!in_block) return;
    if (current.empty()) throw ParseError(no, 1, "cover block has no points");
    covers.push_back(CoverTrace::of(std::move(current)));
    current.clear();
  };

  while (auto entry = lines.next()) {
    auto& [no, line] = *entry;
    if (line == "[points]") {
      flush(no);
      if (!covers.empty() || single) throw ParseError(no, 1, "[points] must be the only block");
      single = true;
      in_block = true;
    } else if (line.rfind("[cover", 0) == 0) {
      if (single) throw ParseError(no, 1, "cannot mix [points] and [cover n]");
      if (line.back() != ']') throw ParseError(no, 1, "unterminated cover header");
      std::string num = line.substr(6, line.size() - 7);
      num.erase(0, num.find_first_not_of(" \t"));
      Cursor c{num};
      Nat index = c.number();
      if (index != expected_index)
        throw ParseError(no, 1, "cover blocks must be numbered consecutively from 0");
      ++expected_index;
      flush(no);
      in_block = true;
    } else {
      if (!in_block) throw ParseError(no, 1, "content before a cover header");
      auto colon = line.find(':');
      if (colon == std::string::npos) throw ParseError(no, 1, "expected 'label: ep(...)'");
      std::string label = line.substr(0, colon);
      while (!label.empty() && (label.back() == ' ' || label.back() == '\t')) label.pop_back();
      if (label.empty()) throw ParseError(no, 1, "empty point label");
      std::string rest = line.substr(colon + 1);
      rest.erase(0, rest.find_first_not_of(" \t"));
      current.emplace_back(label, parse_epset_line(no, rest));
    }
  }
  flush(lines.line_no);
  if (covers.empty()) throw ParseError(lines.line_no, 1, "no cover blocks");
  try {
    return CoverSequence::of(std::move(covers));
  } catch (const std::invalid_argument& e) {
    throw ParseError(lines.line_no, 1, e.what());
  }
}

std::string serialize(const CoverTrace& cover) {
  std::string out = "[points]\n";
  for (std::size_t i = 0; i < cover.size(); ++i)
    out += cover.points()[i] + ": " + serialize(cover.trace(i)) + "\n";
  return out;
}

std::string serialize(const CoverSequence& seq) {
  if (seq.length() == 1) return serialize(seq.covers()[0]);
  std::string out;
  for (std::size_t k = 0; k < seq.length(); ++k) {
    out += "[cover " + std::to_string(k) + "]\n";
    const CoverTrace& c = seq.covers()[k];
    for (std::size_t i = 0; i < c.size(); ++i)
      out += c.points()[i] + ": " + serialize(c.trace(i)) + "\n";
  }
  return out;
}

nlohmann::json to_json(const EPSet& a) {
  return {{"prefix", a.prefix()},
          {"start", a.start()},
          {"period", a.period()},
          {"pattern", a.pattern()}};
}

nlohmann::json to_json(const QAFun& f) {
  return {{"table", f.table()},
          {"period", f.period()},
          {"incr", f.incr()},
          {"base", f.base()}};
}

nlohmann::json to_json(const StrandFun& g) {
  nlohmann::json strands = nlohmann::json::array();
  for (std::size_t i = 0; i < g.strand_count(); ++i) strands.push_back(to_json(g.strand(i)));
  return {{"strands", strands}};
}

nlohmann::json to_json(const FamilySpec& f) {
  nlohmann::json gens = nlohmann::json::array();
  for (const EPSet& g : f.generators) gens.push_back(to_json(g));
  return {{"claim", to_string(f.claim)}, {"generators", gens}};
}

nlohmann::json to_json(const TestBattery& b) {
  nlohmann::json tests = nlohmann::json::array();
  for (const EPSet& t : b.tests) tests.push_back(to_json(t));
  return {{"tests", tests}};
}

nlohmann::json to_json(const LazyTruncation& t) {
  return {{"name", t.name}, {"params", t.params}, {"depth", t.depth}, {"elements", t.elements}};
}

nlohmann::json to_json(const CoverTrace& c) {
  nlohmann::json points = nlohmann::json::array();
  for (std::size_t i = 0; i < c.size(); ++i)
    points.push_back({{"label", c.points()[i]}, {"trace", to_json(c.trace(i))}});
  return {{"points", points}};
}

nlohmann::json to_json(const CoverSequence& s) {
  nlohmann::json covers = nlohmann::json::array();
  for (const CoverTrace& c : s.covers()) covers.push_back(to_json(c));
  return {{"covers", covers}};
}

EPSet epset_from_json(const nlohmann::json& j) {
  return EPSet::from_parts(j.at("prefix").get<std::vector<Nat>>(),
                           j.at("start").get<Nat>(), j.at("period").get<Nat>(),
                           j.at("pattern").get<std::vector<Nat>>());
}

QAFun qafun_from_json(const nlohmann::json& j) {
  return QAFun::from_parts(j.at("table").get<std::vector<Nat>>(), j.at("incr").get<Nat>(),
                           j.at("base").get<std::vector<Nat>>());
}

}  // namespace omegalab
