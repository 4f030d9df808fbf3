#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "omegalab/epset.hpp"

namespace omegalab {

/// A finitely generated family of infinite sets. Membership questions are
/// always answered for the generated semifilter (upward closure under
/// almost-inclusion), never for the raw generator list alone.
struct FamilySpec {
  enum class Claim { None, SemifilterBase, FilterBase, FilterSubbase };

  std::vector<EPSet> generators;  // canonical, deduplicated, all infinite
  Claim claim = Claim::None;

  static FamilySpec of(std::vector<EPSet> gens, Claim claim = Claim::None);
  bool operator==(const FamilySpec&) const = default;
};

/// A finite stand-in for quantification over all infinite sets.
struct TestBattery {
  std::vector<EPSet> tests;  // all infinite; order-insensitive semantics

  static TestBattery of(std::vector<EPSet> tests);
  bool operator==(const TestBattery&) const = default;
};

const char* to_string(FamilySpec::Claim claim);
std::optional<FamilySpec::Claim> claim_from_string(const std::string& s);

/// b belongs to the generated semifilter: some generator is almost inside b.
bool gen_membership(const EPSet& b, const FamilySpec& family);

/// All intersections of up to k generators, canonical and deduplicated.
/// Throws FiniteIntersectionError naming the first finite tuple.
FamilySpec psi_k(const FamilySpec& family, Nat k);

/// Every finite intersection of generators is infinite.
bool subbase_check(const FamilySpec& family);

/// Every pairwise meet is almost-above some generator.
bool is_filter_base(const FamilySpec& family);

/// a is in the dual family: complement(a) is finite or outside the
/// generated semifilter.
bool dual_membership(const EPSet& a, const FamilySpec& family);

/// c splits every member of Y: both y & c and y & complement(c) infinite.
bool split_witness_check(std::span<const EPSet> members, const EPSet& c);

/// No battery member splits the whole family.
bool reaping_relative(std::span<const EPSet> members, const TestBattery& battery);

/// Filter base that decides every battery member one way or the other.
bool ultra_relative(const FamilySpec& family, const TestBattery& battery);

/// Every battery member almost-contains some generator.
bool base_for_roth_relative(const FamilySpec& family, const TestBattery& battery);

}  // namespace omegalab
