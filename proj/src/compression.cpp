#include "omegalab/compression.hpp"

#include <algorithm>
#include <numeric>

#include "omegalab/families.hpp"

namespace omegalab {

namespace detail {

EPSet window_hit_set(const EPSet& a, const QAFun& h, Nat offset, Nat step) {
  if (!h.increasing())
    throw NotIncreasingError("window_hit_set: window function not increasing");

  // Window ends as functions of the round index t.
  QAFun lo = restrict_progression(h, offset, step);
  QAFun hi = restrict_progression(h, checked_add(offset, 1), step);

  Nat period = lcm_checked(lo.period(), hi.period());
  Nat advance = lo.incr() * (period / lo.period());  // == hi's advance per period
  Nat t_start = std::max(lo.start(), hi.start());

  if (a.infinite()) {
    // Align the advance with a's period and push past a's start, so that a
    // hit depends only on residues and repeats every `period` rounds.
    Nat p = a.period();
    period = checked_mul(period, p / std::gcd(advance, p));
    if (period > kWindowLimit) throw std::overflow_error("window_hit_set: period blowup");
    while (lo.eval(t_start) < a.start()) ++t_start;
  } else {
    // Finite set: once the window clears the last element, every round misses.
    Nat bound = a.prefix().empty() ? 0 : a.prefix().back() + 1;
    while (lo.eval(t_start) < bound) ++t_start;
    period = 1;
  }

  auto hit = [&](Nat t) {
    Nat x = lo.eval(t), y = hi.eval(t);
    auto nxt = a.next_at_or_after(x);
    return nxt.has_value() && *nxt < y;
  };
  return EPSet::from_eventual_predicate(hit, t_start, period);
}

}  // namespace detail

EPSet compress_set(const EPSet& a, const QAFun& h) {
  if (!a.infinite()) throw FiniteSetError("compress_set: set is finite");
  if (!h.increasing()) throw NotIncreasingError("compress_set: compressor not increasing");
  return detail::window_hit_set(a, h, 0, 1);
}

std::vector<EPSet> compress_family(std::span<const EPSet> family, const QAFun& h) {
  std::vector<EPSet> out;
  for (const EPSet& a : family) {
    EPSet c = compress_set(a, h);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

bool is_slalom(const QAFun& h, std::span<const EPSet> family) {
  for (const EPSet& a : family)
    if (!compress_set(a, h).cofinite()) return false;
  return true;
}

QAFun build_slalom(std::span<const EPSet> family) {
  if (family.empty()) throw std::invalid_argument("build_slalom: empty family");
  Nat gap = 1;
  for (const EPSet& a : family) gap = std::max(gap, a.tail_gap_bound());
  return QAFun::linear(gap, 0);
}

bool frechet_after(std::span<const EPSet> family, const QAFun& h) {
  return is_slalom(h, family);
}

const char* to_string(TrichotomyVerdict::Tag tag) {
  switch (tag) {
    case TrichotomyVerdict::Tag::Frechet: return "Frechet";
    case TrichotomyVerdict::Tag::UltraLike: return "UltraLike";
    case TrichotomyVerdict::Tag::FullLike: return "FullLike";
    case TrichotomyVerdict::Tag::Unclassified: return "Unclassified";
  }
  return "?";
}

TrichotomyVerdict classify_trichotomy(std::span<const EPSet> family, const QAFun& h,
                                      std::span<const EPSet> tests) {
  for (const EPSet& c : tests)
    if (!c.infinite()) throw FiniteSetError("classify_trichotomy: finite test set");

  TrichotomyVerdict v;
  v.h = h;
  v.compressed = compress_family(family, h);

  bool frechet = true;
  for (const EPSet& c : v.compressed)
    if (!c.cofinite()) frechet = false;
  if (frechet) {
    v.tag = TrichotomyVerdict::Tag::Frechet;
    return v;
  }

  // FullLike: every test almost-contains some compressed generator.
  {
    std::vector<TrichotomyVerdict::Decision> cover;
    bool full = true;
    for (std::size_t t = 0; t < tests.size() && full; ++t) {
      bool found = false;
      for (std::size_t i = 0; i < v.compressed.size(); ++i)
        if (almost_subset(v.compressed[i], tests[t])) {
          cover.push_back({t, i, false});
          found = true;
          break;
        }
      full = found;
    }
    if (full) {
      v.tag = TrichotomyVerdict::Tag::FullLike;
      v.table = std::move(cover);
      return v;
    }
  }

  // UltraLike: a filter base that decides every test one way or the other.
  if (is_filter_base(FamilySpec::of(v.compressed))) {
    std::vector<TrichotomyVerdict::Decision> decisions;
    bool decisive = true;
    for (std::size_t t = 0; t < tests.size() && decisive; ++t) {
      bool found = false;
      for (std::size_t i = 0; i < v.compressed.size() && !found; ++i) {
        if (almost_subset(v.compressed[i], tests[t])) {
          decisions.push_back({t, i, false});
          found = true;
        } else if (almost_subset(v.compressed[i], complement(tests[t]))) {
          decisions.push_back({t, i, true});
          found = true;
        }
      }
      decisive = found;
    }
    if (decisive) {
      v.tag = TrichotomyVerdict::Tag::UltraLike;
      v.table = std::move(decisions);
      return v;
    }
  }

  v.tag = TrichotomyVerdict::Tag::Unclassified;
  return v;
}

bool TrichotomyVerdict::reverify(std::span<const EPSet> family,
                                 std::span<const EPSet> tests) const {
  std::vector<EPSet> again = compress_family(family, h);
  if (again != compressed) return false;
  switch (tag) {
    case Tag::Frechet:
      return is_slalom(h, family);
    case Tag::FullLike: {
      if (table.size() != tests.size()) return false;
      for (const Decision& d : table)
        if (d.complement_side || d.test >= tests.size() || d.generator >= compressed.size() ||
            !almost_subset(compressed[d.generator], tests[d.test]))
          return false;
      return true;
    }
    case Tag::UltraLike: {
      if (!is_filter_base(FamilySpec::of(compressed))) return false;
      if (table.size() != tests.size()) return false;
      for (const Decision& d : table) {
        if (d.test >= tests.size() || d.generator >= compressed.size()) return false;
        const EPSet side = d.complement_side ? complement(tests[d.test]) : tests[d.test];
        if (!almost_subset(compressed[d.generator], side)) return false;
      }
      return true;
    }
    case Tag::Unclassified:
      return true;
  }
  return false;
}

}  // namespace omegalab
