#include "omegalab/families.hpp"

#include <algorithm>

namespace omegalab {

FamilySpec FamilySpec::of(std::vector<EPSet> gens, Claim claim) {
  if (gens.empty()) throw std::invalid_argument("FamilySpec: needs at least one generator");
  for (const EPSet& g : gens)
    if (!g.infinite()) throw FiniteSetError("FamilySpec: finite generator");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  FamilySpec f;
  f.generators = std::move(gens);
  f.claim = claim;
  return f;
}

TestBattery TestBattery::of(std::vector<EPSet> tests) {
  for (const EPSet& t : tests)
    if (!t.infinite()) throw FiniteSetError("TestBattery: finite test");
  TestBattery b;
  b.tests = std::move(tests);
  return b;
}

const char* to_string(FamilySpec::Claim claim) {
  switch (claim) {
    case FamilySpec::Claim::None: return "none";
    case FamilySpec::Claim::SemifilterBase: return "semifilter-base";
    case FamilySpec::Claim::FilterBase: return "filter-base";
    case FamilySpec::Claim::FilterSubbase: return "filter-subbase";
  }
  return "?";
}

std::optional<FamilySpec::Claim> claim_from_string(const std::string& s) {
  if (s == "none") return FamilySpec::Claim::None;
  if (s == "semifilter-base") return FamilySpec::Claim::SemifilterBase;
  if (s == "filter-base") return FamilySpec::Claim::FilterBase;
  if (s == "filter-subbase") return FamilySpec::Claim::FilterSubbase;
  return std::nullopt;
}

bool gen_membership(const EPSet& b, const FamilySpec& family) {
  if (!b.infinite()) throw FiniteSetError("gen_membership: set is finite");
  for (const EPSet& a : family.generators)
    if (almost_subset(a, b)) return true;
  return false;
}

FamilySpec psi_k(const FamilySpec& family, Nat k) {
  if (k == 0) throw std::invalid_argument("psi_k: k must be >= 1");
  const auto& gens = family.generators;
  std::size_t n = gens.size();
  std::vector<EPSet> out;

  // Tuples with repetition collapse to subsets of size <= k.
  std::vector<std::size_t> pick;
  auto emit = [&](const std::vector<std::size_t>& ix) {
    EPSet meet = gens[ix[0]];
    for (std::size_t j = 1; j < ix.size(); ++j) meet = intersect(meet, gens[ix[j]]);
    if (!meet.infinite())
      throw FiniteIntersectionError(std::vector<std::size_t>(ix),
                                    "psi_k: finite intersection of generators");
    if (std::find(out.begin(), out.end(), meet) == out.end()) out.push_back(meet);
  };
  // Depth-first enumeration of increasing index tuples of size 1..k.
  std::vector<std::size_t> stack;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!stack.empty()) emit(stack);
    if (stack.size() == k) return;
    for (std::size_t i = from; i < n; ++i) {
      stack.push_back(i);
      self(self, i + 1);
      stack.pop_back();
    }
  };
  rec(rec, 0);
  return FamilySpec::of(std::move(out), family.claim);
}

bool subbase_check(const FamilySpec& family) {
  EPSet meet = family.generators[0];
  for (std::size_t i = 1; i < family.generators.size(); ++i) {
    meet = intersect(meet, family.generators[i]);
    if (!meet.infinite()) return false;
  }
  return true;
}

bool is_filter_base(const FamilySpec& family) {
  const auto& gens = family.generators;
  for (const EPSet& a : gens)
    for (const EPSet& b : gens) {
      EPSet meet = intersect(a, b);
      bool witnessed = false;
      for (const EPSet& c : gens)
        if (almost_subset(c, meet)) {
          witnessed = true;
          break;
        }
      if (!witnessed) return false;
    }
  return true;
}

bool dual_membership(const EPSet& a, const FamilySpec& family) {
  if (!a.infinite()) throw FiniteSetError("dual_membership: set is finite");
  EPSet comp = complement(a);
  if (!comp.infinite()) return true;  // cofinite sets are never excluded
  return !gen_membership(comp, family);
}

bool split_witness_check(std::span<const EPSet> members, const EPSet& c) {
  if (!c.infinite()) throw FiniteSetError("split_witness_check: splitter is finite");
  EPSet comp = complement(c);
  for (const EPSet& y : members) {
    if (!y.infinite()) throw FiniteSetError("split_witness_check: member is finite");
    if (!intersect(y, c).infinite()) return false;
    if (!intersect(y, comp).infinite()) return false;
  }
  return true;
}

bool reaping_relative(std::span<const EPSet> members, const TestBattery& battery) {
  for (const EPSet& c : battery.tests)
    if (split_witness_check(members, c)) return false;
  return true;
}

bool ultra_relative(const FamilySpec& family, const TestBattery& battery) {
  if (!is_filter_base(family)) return false;
  for (const EPSet& c : battery.tests) {
    EPSet comp = complement(c);
    bool decided = false;
    for (const EPSet& a : family.generators)
      if (almost_subset(a, c) || almost_subset(a, comp)) {
        decided = true;
        break;
      }
    if (!decided) return false;
  }
  return true;
}

bool base_for_roth_relative(const FamilySpec& family, const TestBattery& battery) {
  for (const EPSet& c : battery.tests) {
    bool matched = false;
    for (const EPSet& a : family.generators)
      if (almost_subset(a, c)) {
        matched = true;
        break;
      }
    if (!matched) return false;
  }
  return true;
}

}  // namespace omegalab
