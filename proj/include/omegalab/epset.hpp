#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <vector>

#include "omegalab/errors.hpp"
#include "omegalab/numeric.hpp"

namespace omegalab {

/// An eventually periodic subset of the naturals, always held in canonical
/// form: minimal period, then minimal start, prefix strictly below start.
///
/// membership(n) = n < start ? n in prefix
///                           : ((n - start) mod period) in pattern
///
/// Finite sets are first-class: pattern empty, period 1, start just past the
/// last element. Two EPSets are equal as sets iff they compare equal.
class EPSet {
 public:
  EPSet() : start_(0), period_(1) {}  // the empty set

  /// Canonicalizing constructor. Accepts any well-formed field combination
  /// (period >= 1, pattern within [0, period), prefix below start) and
  /// reduces it to canonical form. Throws std::invalid_argument otherwise.
  static EPSet from_parts(std::vector<Nat> prefix, Nat start, Nat period,
                          std::vector<Nat> pattern);

  static EPSet naturals();
  static EPSet finite(std::vector<Nat> elements);
  /// Tail-only set {n >= 0 : n mod period in pattern}.
  static EPSet residues(Nat period, std::vector<Nat> pattern);

  /// Builds the set {n : pred(n)} given a proof obligation discharged by the
  /// caller: pred(n + period) == pred(n) for every n >= start.
  static EPSet from_eventual_predicate(const std::function<bool(Nat)>& pred,
                                       Nat start, Nat period);

  bool member(Nat n) const;
  bool infinite() const { return !pattern_.empty(); }
  bool empty() const { return pattern_.empty() && prefix_.empty(); }
  bool cofinite() const { return pattern_.size() == period_; }

  const std::vector<Nat>& prefix() const { return prefix_; }
  Nat start() const { return start_; }
  Nat period() const { return period_; }
  const std::vector<Nat>& pattern() const { return pattern_; }

  /// Least G such that every window [x, x+G) with x >= start + period meets
  /// the set. Throws FiniteSetError on finite sets.
  Nat tail_gap_bound() const;

  std::optional<Nat> next_at_or_after(Nat x) const;
  /// i-th smallest element, 0-indexed. Throws FiniteSetError past the end.
  Nat nth(Nat i) const;
  Nat count_below(Nat bound) const;
  std::vector<Nat> elements_below(Nat bound) const;

  bool operator==(const EPSet&) const = default;
  auto operator<=>(const EPSet&) const = default;

 private:
  std::vector<Nat> prefix_;
  Nat start_;
  Nat period_;
  std::vector<Nat> pattern_;
};

EPSet intersect(const EPSet& a, const EPSet& b);
EPSet unite(const EPSet& a, const EPSet& b);
EPSet complement(const EPSet& a);
EPSet difference(const EPSet& a, const EPSet& b);

/// a \ b finite.
bool almost_subset(const EPSet& a, const EPSet& b);
bool is_cofinite(const EPSet& a);

/// Construction already canonicalizes, so this is the identity; kept so the
/// operation has a name and an idempotence test.
EPSet canonicalize(const EPSet& a);

}  // namespace omegalab
