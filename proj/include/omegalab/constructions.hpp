#pragma once

#include <set>
#include <span>
#include <utility>
#include <vector>

#include "omegalab/compression.hpp"
#include "omegalab/epset.hpp"
#include "omegalab/families.hpp"
#include "omegalab/lazy.hpp"
#include "omegalab/qafun.hpp"

namespace omegalab {

/// The union of every other compressor window, U_n [h(2n), h(2n+1)), as an
/// exact EPSet. Splits any family that h is a slalom for.
EPSet splitter_from_slalom(const QAFun& h);

/// The 2n smallest elements of y (0-indexed enumeration), n >= 1.
std::vector<Nat> first2n(const EPSet& y, Nat n);

/// Guesser for a finite family of infinite sets: round n is answered from
/// strand n mod k, so each source is matched on its whole residue class.
class GuesserProgram {
 public:
  explicit GuesserProgram(std::vector<EPSet> sources);

  std::size_t strand_count() const { return sources_.size(); }
  const std::vector<EPSet>& sources() const { return sources_; }
  /// guess(n) = the 2n smallest elements of sources[n mod k], n >= 1.
  std::vector<Nat> guess(Nat n) const;

 private:
  std::vector<EPSet> sources_;
};

GuesserProgram rothberger_guesser(std::vector<EPSet> family);

/// Greedy disjoint streams: round n takes the two smallest unused members of
/// guess(n), the smaller into I, the larger into J. I and J are disjoint and
/// meet every source infinitely often.
std::pair<LazySet, LazySet> ij_from_guesser(const GuesserProgram& g);

/// n |-> g(h(n+1)).
QAFun gtilde(const QAFun& g, const QAFun& h);

/// Replay of the bound-transfer argument: compressing [f <= g] by h lands
/// inside [f <= gtilde] for every f in the family.
struct BoundingReport {
  std::vector<QAFun> family;
  QAFun bound;
  QAFun compressor;
  QAFun tilde;
  std::vector<EPSet> below_sets;        // [f <= g]
  std::vector<EPSet> compressed;        // [f <= g]/h
  std::vector<EPSet> tilde_below_sets;  // [f <= gtilde]
  std::vector<bool> flags;              // compressed almost inside tilde set
  std::vector<bool> exact_flags;        // plain inclusion, which also holds

  bool verifies() const;
  /// Deterministic re-check of the stored data.
  bool recheck() const;
};

/// Requires: each f nondecreasing, g nondecreasing, h strictly increasing,
/// every [f <= g] infinite (else WitnessInvalidError naming f).
BoundingReport bounding_reduction(std::span<const QAFun> family, const QAFun& g,
                                  const QAFun& h);

/// Pointwise maxima of all nonempty subsets, deduplicated.
std::vector<QAFun> maxfin_closure(std::span<const QAFun> family);

/// pointwise_max(family) + 1: beats every element of the closure everywhere.
QAFun escape_function(std::span<const QAFun> family);

/// Generators {[f < g] : f in family}; a filter subbase whenever g escapes
/// the whole maxfin closure (else WitnessInvalidError naming the violator).
FamilySpec filter_subbase_from_bound(std::span<const QAFun> family, const QAFun& g);

/// Classical slalom recursion h(0) = 0, h(n+1) = b(h(n)) + 1 with b the
/// pointwise max of the (increasing) family; leaves the eventually periodic
/// class, so it is exposed as a stream.
LazyFun recursive_slalom_stream(std::vector<QAFun> family);

namespace detail {

/// The greedy two-pick engine behind ij_from_guesser. per_round controls how
/// many candidates round n has entered (per_round * n); anything below 2
/// starves the rounds and raises ExhaustedChoiceError eventually.
class GreedyPicker {
 public:
  explicit GreedyPicker(std::vector<EPSet> sources, Nat per_round = 2);

  struct Round {
    Nat pick_i;
    Nat pick_j;
  };
  Round step();
  /// No future pick can be below this; nondecreasing over rounds.
  Nat settled_below();

 private:
  std::vector<EPSet> sources_;
  Nat per_round_;
  std::vector<std::vector<Nat>> avail_;  // entered candidates, increasing
  std::vector<std::size_t> head_;        // first unconsumed position per strand
  std::vector<Nat> entered_;
  std::set<Nat> used_;
  Nat round_ = 0;

  void skip_used(std::size_t strand);
};

}  // namespace detail

}  // namespace omegalab
