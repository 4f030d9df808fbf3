#include "omegalab/epset.hpp"

#include <algorithm>
#include <cassert>

namespace omegalab {

namespace {

void sort_unique(std::vector<Nat>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool sorted_contains(const std::vector<Nat>& v, Nat x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

EPSet EPSet::from_parts(std::vector<Nat> prefix, Nat start, Nat period,
                        std::vector<Nat> pattern) {
  if (period == 0) throw std::invalid_argument("EPSet: period must be >= 1");
  sort_unique(prefix);
  sort_unique(pattern);
  if (!prefix.empty() && prefix.back() >= start)
    throw std::invalid_argument("EPSet: prefix element not below start");
  if (!pattern.empty() && pattern.back() >= period)
    throw std::invalid_argument("EPSet: pattern residue not below period");

  EPSet s;
  if (pattern.empty()) {
    // Finite set: everything lives in the prefix.
    s.prefix_ = std::move(prefix);
    s.start_ = s.prefix_.empty() ? 0 : s.prefix_.back() + 1;
    s.period_ = 1;
    return s;
  }

  // Absolute residues of the tail: n >= start is in the set iff
  // (n mod period) is in abs.
  std::vector<bool> abs(period, false);
  for (Nat r : pattern) abs[(r + start % period) % period] = true;

  // Minimal period: smallest divisor d of period with abs shift-invariant
  // under +d.
  Nat d = period;
  for (Nat cand = 1; cand <= period / 2; ++cand) {
    if (period % cand != 0) continue;
    bool ok = true;
    for (Nat x = 0; x < period && ok; ++x)
      if (abs[x] != abs[(x + cand) % period]) ok = false;
    if (ok) {
      d = cand;
      break;
    }
  }
  std::vector<bool> absd(d, false);
  for (Nat x = 0; x < period; ++x)
    if (abs[x]) absd[x % d] = true;

  // Minimal start: walk downwards while the prefix agrees with the tail rule.
  Nat s0 = start;
  while (s0 > 0) {
    bool in_prefix = sorted_contains(prefix, s0 - 1);
    bool in_tail = absd[(s0 - 1) % d];
    if (in_prefix != in_tail) break;
    --s0;
  }

  s.start_ = s0;
  s.period_ = d;
  for (Nat x : prefix)
    if (x < s0) s.prefix_.push_back(x);
  for (Nat r = 0; r < d; ++r)
    if (absd[(r + s0 % d) % d]) s.pattern_.push_back(r);
  return s;
}

EPSet EPSet::naturals() { return residues(1, {0}); }

EPSet EPSet::finite(std::vector<Nat> elements) {
  Nat start = 0;
  for (Nat x : elements) start = std::max(start, x + 1);
  return from_parts(std::move(elements), start, 1, {});
}

EPSet EPSet::residues(Nat period, std::vector<Nat> pattern) {
  return from_parts({}, 0, period, std::move(pattern));
}

EPSet EPSet::from_eventual_predicate(const std::function<bool(Nat)>& pred,
                                     Nat start, Nat period) {
  if (period == 0 || period > kWindowLimit || start > kWindowLimit)
    throw std::overflow_error("EPSet: predicate window exceeds limit");
  std::vector<Nat> prefix;
  for (Nat n = 0; n < start; ++n)
    if (pred(n)) prefix.push_back(n);
  std::vector<Nat> pattern;
  for (Nat r = 0; r < period; ++r)
    if (pred(start + r)) pattern.push_back(r);
  return from_parts(std::move(prefix), start, period, std::move(pattern));
}

bool EPSet::member(Nat n) const {
  if (n < start_) return sorted_contains(prefix_, n);
  if (pattern_.empty()) return false;
  return sorted_contains(pattern_, (n - start_) % period_);
}

Nat EPSet::tail_gap_bound() const {
  if (!infinite()) throw FiniteSetError("tail_gap_bound: set is finite");
  Nat g = pattern_[0] + period_ - pattern_.back();  // wrap-around gap
  for (std::size_t i = 0; i + 1 < pattern_.size(); ++i)
    g = std::max(g, pattern_[i + 1] - pattern_[i]);
  return g;
}

std::optional<Nat> EPSet::next_at_or_after(Nat x) const {
  if (x < start_) {
    auto it = std::lower_bound(prefix_.begin(), prefix_.end(), x);
    if (it != prefix_.end()) return *it;
    x = start_;
  }
  if (pattern_.empty()) return std::nullopt;
  Nat r = (x - start_) % period_;
  auto it = std::lower_bound(pattern_.begin(), pattern_.end(), r);
  if (it != pattern_.end()) return x + (*it - r);
  return x + (period_ - r) + pattern_[0];
}

Nat EPSet::nth(Nat i) const {
  if (i < prefix_.size()) return prefix_[i];
  if (pattern_.empty()) throw FiniteSetError("nth: index past the end of a finite set");
  Nat j = i - prefix_.size();
  Nat m = pattern_.size();
  return start_ + pattern_[j % m] + period_ * (j / m);
}

Nat EPSet::count_below(Nat bound) const {
  Nat c = std::lower_bound(prefix_.begin(), prefix_.end(), bound) - prefix_.begin();
  if (bound <= start_ || pattern_.empty()) return c;
  Nat span = bound - start_;
  Nat m = pattern_.size();
  c += (span / period_) * m;
  Nat rem = span % period_;
  c += std::lower_bound(pattern_.begin(), pattern_.end(), rem) - pattern_.begin();
  return c;
}

std::vector<Nat> EPSet::elements_below(Nat bound) const {
  std::vector<Nat> out;
  for (Nat x : prefix_) {
    if (x >= bound) return out;
    out.push_back(x);
  }
  if (pattern_.empty()) return out;
  for (Nat basepos = start_;; basepos += period_) {
    for (Nat r : pattern_) {
      Nat x = basepos + r;
      if (x >= bound) return out;
      out.push_back(x);
    }
    if (basepos + period_ <= basepos) break;  // overflow guard
  }
  return out;
}

namespace {

EPSet combine(const EPSet& a, const EPSet& b, bool (*op)(bool, bool)) {
  Nat period = lcm_checked(a.period(), b.period());
  Nat start = std::max(a.start(), b.start());
  return EPSet::from_eventual_predicate(
      [&](Nat n) { return op(a.member(n), b.member(n)); }, start, period);
}

}  // namespace

EPSet intersect(const EPSet& a, const EPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

EPSet unite(const EPSet& a, const EPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

EPSet difference(const EPSet& a, const EPSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

EPSet complement(const EPSet& a) {
  return EPSet::from_eventual_predicate([&](Nat n) { return !a.member(n); },
                                        a.start(), a.period());
}

bool almost_subset(const EPSet& a, const EPSet& b) {
  return !difference(a, b).infinite();
}

bool is_cofinite(const EPSet& a) { return a.cofinite(); }

EPSet canonicalize(const EPSet& a) { return a; }

}  // namespace omegalab
