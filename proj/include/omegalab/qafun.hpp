#pragma once

#include <compare>
#include <span>
#include <vector>

#include "omegalab/epset.hpp"
#include "omegalab/errors.hpp"
#include "omegalab/numeric.hpp"

namespace omegalab {

/// An eventually periodic-increment function N -> N, canonical form.
///
///   f(n) = table[n]                                  for n <  s
///   f(n) = base[(n-s) mod m] + incr * ((n-s) div m)  for n >= s
///
/// where s = table.size() and m = base.size() >= 1. Canonical means m and s
/// are minimal; equal functions compare equal. incr = 0 is allowed (bounded
/// tails); strict increase is a derived predicate checked where needed.
class QAFun {
 public:
  QAFun() : incr_(0), base_{0} {}  // constant zero

  static QAFun from_parts(std::vector<Nat> table, Nat incr, std::vector<Nat> base);
  static QAFun constant(Nat c);
  static QAFun linear(Nat slope, Nat offset);  // n |-> slope*n + offset
  static QAFun identity();

  Nat eval(Nat n) const;
  Nat start() const { return table_.size(); }
  Nat period() const { return base_.size(); }
  Nat incr() const { return incr_; }
  const std::vector<Nat>& table() const { return table_; }
  const std::vector<Nat>& base() const { return base_; }

  bool increasing() const;     // strictly
  bool nondecreasing() const;

  bool operator==(const QAFun&) const = default;
  auto operator<=>(const QAFun&) const = default;

 private:
  std::vector<Nat> table_;
  Nat incr_;
  std::vector<Nat> base_;
};

/// g(f(n)) as a QAFun, exact at every point.
QAFun compose(const QAFun& g, const QAFun& f);

/// Pointwise maximum of a nonempty family; stays in the class because one
/// slope eventually wins on every residue class of the aligned period.
QAFun pointwise_max(std::span<const QAFun> fs);

QAFun shift(const QAFun& f, Nat t);          // n |-> f(n + t)
QAFun add_constant(const QAFun& f, Nat c);   // n |-> f(n) + c
QAFun restrict_progression(const QAFun& f, Nat offset, Nat step);  // t |-> f(offset + step*t)

/// f(n) <= g(n) for all but finitely many n.
bool le_star(const QAFun& f, const QAFun& g);

/// {n : f(n) <= g(n)} (or strict <) as an exact EPSet, possibly finite.
EPSet le_set(const QAFun& f, const QAFun& g, bool strict);
EPSet equal_set(const QAFun& f, const QAFun& g);

/// {n : f(n) in a}.
EPSet member_set(const QAFun& f, const EPSet& a);

/// Exact image of a strictly increasing function. Throws NotIncreasingError.
EPSet image_set(const QAFun& f);

/// Strictly increasing enumeration of an infinite set; image_set inverts it.
QAFun enumeration(const EPSet& a);

/// Interleaving of finitely many QAFuns by residue class:
/// g(n) = strands[n mod k](n). The guesser representation for functions.
class StrandFun {
 public:
  explicit StrandFun(std::vector<QAFun> strands);
  Nat eval(Nat n) const { return strands_[n % strands_.size()].eval(n); }
  std::size_t strand_count() const { return strands_.size(); }
  const QAFun& strand(std::size_t i) const { return strands_[i]; }
  const std::vector<QAFun>& strands() const { return strands_; }
  bool operator==(const StrandFun&) const = default;

 private:
  std::vector<QAFun> strands_;
};

/// {n : g(n) = f(n)} infinite, decided strand by strand.
bool eq_infinitely_often(const StrandFun& g, const QAFun& f);

}  // namespace omegalab
