#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "omegalab/covers.hpp"
#include "omegalab/epset.hpp"
#include "omegalab/families.hpp"
#include "omegalab/lazy.hpp"
#include "omegalab/qafun.hpp"

namespace omegalab {

// Text is the source-of-truth format; canonical values print and re-parse
// bit-exactly. JSON mirrors the same fields for tooling.

std::string serialize(const EPSet& a);
std::string serialize(const QAFun& f);
std::string serialize(const StrandFun& g);
std::string serialize(const FamilySpec& f);
std::string serialize(const TestBattery& b);

EPSet parse_epset(std::string_view text);
QAFun parse_qafun(std::string_view text);
StrandFun parse_strandfun(std::string_view text);

/// Streams serialize only as truncations: generator name + parameters,
/// depth, and the elements below it.
struct LazyTruncation {
  std::string name;
  std::string params;
  Nat depth = 0;
  std::vector<Nat> elements;
  bool operator==(const LazyTruncation&) const = default;
};

LazyTruncation take_truncation(const LazySet& s, Nat depth);
std::string serialize(const LazyTruncation& t);
LazyTruncation parse_truncation(std::string_view text);

/// Family document:
///   [generators]
///   claim: filter-base        (optional)
///   ep(...)                   (one per line)
///   [tests]                   (optional section)
///   ep(...)
/// '#' starts a comment; blank lines are ignored.
struct FamilyDocument {
  FamilySpec family;
  std::optional<TestBattery> battery;
  bool operator==(const FamilyDocument&) const = default;
};

FamilyDocument parse_family_document(std::string_view text);
std::string serialize(const FamilyDocument& doc);

/// Cover document: either a single block
///   [points]
///   x: ep(...)
/// or a cyclic sequence of blocks [cover 0], [cover 1], ... with the same
/// point labels.
CoverSequence parse_cover_document(std::string_view text);
std::string serialize(const CoverSequence& seq);
std::string serialize(const CoverTrace& cover);

nlohmann::json to_json(const EPSet& a);
nlohmann::json to_json(const QAFun& f);
nlohmann::json to_json(const StrandFun& g);
nlohmann::json to_json(const FamilySpec& f);
nlohmann::json to_json(const TestBattery& b);
nlohmann::json to_json(const LazyTruncation& t);
nlohmann::json to_json(const CoverTrace& c);
nlohmann::json to_json(const CoverSequence& s);

EPSet epset_from_json(const nlohmann::json& j);
QAFun qafun_from_json(const nlohmann::json& j);

}  // namespace omegalab
