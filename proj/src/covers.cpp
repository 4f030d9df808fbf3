#include "omegalab/covers.hpp"

#include <algorithm>

namespace omegalab {

CoverTrace CoverTrace::of(std::vector<std::pair<std::string, EPSet>> entries) {
  if (entries.empty()) throw std::invalid_argument("CoverTrace: needs at least one point");
  CoverTrace c;
  for (auto& [label, set] : entries) {
    if (std::find(c.points_.begin(), c.points_.end(), label) != c.points_.end())
      throw std::invalid_argument("CoverTrace: duplicate point label " + label);
    c.points_.push_back(std::move(label));
    c.traces_.push_back(std::move(set));
  }
  return c;
}

const EPSet& CoverTrace::trace(const std::string& label) const {
  auto it = std::find(points_.begin(), points_.end(), label);
  if (it == points_.end())
    throw std::invalid_argument("CoverTrace: unknown point " + label);
  return traces_[it - points_.begin()];
}

namespace {

void require_admissible(const CoverTrace& cover) {
  for (std::size_t i = 0; i < cover.size(); ++i)
    if (cover.trace(i).empty())
      throw EmptyTraceError("point " + cover.points()[i] + " has an empty trace");
}

CoverTags tags_of(const std::vector<EPSet>& traces) {
  CoverTags t;
  t.large = std::all_of(traces.begin(), traces.end(),
                        [](const EPSet& a) { return a.infinite(); });
  t.gamma = std::all_of(traces.begin(), traces.end(),
                        [](const EPSet& a) { return a.cofinite(); });
  EPSet meet = traces.front();
  for (std::size_t i = 1; i < traces.size(); ++i) meet = intersect(meet, traces[i]);
  t.omega_rel = meet.infinite();
  return t;
}

}  // namespace

CoverTags classify_cover(const CoverTrace& cover) {
  require_admissible(cover);
  return tags_of(cover.traces());
}

CoverTrace glue_cover(const CoverTrace& cover, const QAFun& h) {
  require_admissible(cover);
  if (!h.increasing()) throw NotIncreasingError("glue_cover: compressor not increasing");
  std::vector<std::pair<std::string, EPSet>> entries;
  entries.reserve(cover.size());
  for (std::size_t i = 0; i < cover.size(); ++i)
    entries.emplace_back(cover.points()[i], detail::window_hit_set(cover.trace(i), h, 0, 1));
  return CoverTrace::of(std::move(entries));
}

bool split_cover(const CoverTrace& cover, const EPSet& s) {
  require_admissible(cover);
  if (!s.infinite()) throw FiniteSetError("split_cover: splitter is finite");
  EPSet comp = complement(s);
  for (const EPSet& y : cover.traces()) {
    if (!intersect(y, s).infinite()) return false;
    if (!intersect(y, comp).infinite()) return false;
  }
  return true;
}

namespace {

GluePartition glueable_with(const CoverTrace& cover, const QAFun& h) {
  require_admissible(cover);
  for (const EPSet& y : cover.traces())
    if (!y.infinite()) throw FiniteSetError("gamma_glueable: finite trace");

  // Rounds whose window captures the whole sample.
  EPSet full = compress_set(cover.trace(0), h);
  for (std::size_t i = 1; i < cover.size(); ++i)
    full = intersect(full, compress_set(cover.trace(i), h));

  if (full.cofinite()) return {GluePartition::Mode::Case2, h, std::nullopt};
  if (!full.infinite())
    throw WitnessInvalidError("h", "gamma_glueable: only finitely many full windows");

  // Case1 selector: g(0) = 0 and g(n) = h(e(n)) for n >= 1, where e
  // enumerates the full-window rounds. Piece n then contains the complete
  // window of the n-th full round (the first full round falls inside piece
  // 0), so every piece covers the sample.
  QAFun w = compose(h, enumeration(full));
  Nat horizon = w.start() + w.period() + 1;
  std::vector<Nat> table;
  table.push_back(0);
  for (Nat n = 1; n < horizon; ++n) table.push_back(w.eval(n));
  std::vector<Nat> base;
  for (Nat i = 0; i < w.period(); ++i) base.push_back(w.eval(horizon + i));
  QAFun selector = QAFun::from_parts(std::move(table), w.incr(), std::move(base));
  return {GluePartition::Mode::Case1, h, selector};
}

}  // namespace

GluePartition gamma_glueable(const CoverTrace& cover) {
  require_admissible(cover);
  for (const EPSet& y : cover.traces())
    if (!y.infinite()) throw FiniteSetError("gamma_glueable: finite trace");
  return glueable_with(cover, build_slalom(cover.traces()));
}

GluePartition gamma_glueable(const CoverTrace& cover, const QAFun& forced_h) {
  return glueable_with(cover, forced_h);
}

bool GluePartition::reverify(const CoverTrace& cover) const {
  if (mode == Mode::Case2) {
    for (const EPSet& y : cover.traces())
      if (!compress_set(y, h).cofinite()) return false;
    return true;
  }
  if (!selector.has_value() || !selector->increasing() || selector->eval(0) != 0)
    return false;
  for (const EPSet& y : cover.traces())
    if (compress_set(y, *selector) != EPSet::naturals()) return false;
  return true;
}

CoverSequence CoverSequence::of(std::vector<CoverTrace> covers) {
  if (covers.empty()) throw std::invalid_argument("CoverSequence: needs at least one cover");
  for (std::size_t i = 1; i < covers.size(); ++i)
    if (covers[i].points() != covers[0].points())
      throw std::invalid_argument("CoverSequence: covers disagree on the point sample");
  CoverSequence s;
  s.covers_ = std::move(covers);
  return s;
}

const char* to_string(SelectionMode mode) {
  switch (mode) {
    case SelectionMode::S1: return "S1";
    case SelectionMode::Sfin: return "Sfin";
    case SelectionMode::Ufin: return "Ufin";
  }
  return "?";
}

namespace detail {

EPSet embed_progression(const EPSet& s, Nat offset, Nat step) {
  if (step == 0) throw std::invalid_argument("embed_progression: step must be >= 1");
  Nat start = checked_add(offset, checked_mul(step, s.start()));
  Nat period = checked_mul(step, s.period());
  if (period > kWindowLimit) throw std::overflow_error("embed_progression: period blowup");
  auto pred = [&](Nat n) {
    if (n < offset || (n - offset) % step != 0) return false;
    return s.member((n - offset) / step);
  };
  return EPSet::from_eventual_predicate(pred, start, period);
}

}  // namespace detail

SelectionVerdict evaluate_selection(const CoverSequence& seq, const PickSchedule& schedule,
                                    SelectionMode mode) {
  bool wants_windows = mode != SelectionMode::S1;
  if (wants_windows != (schedule.kind == PickSchedule::Kind::Windows))
    throw std::invalid_argument("evaluate_selection: schedule shape does not match mode");
  if (wants_windows && !schedule.fn.increasing())
    throw NotIncreasingError("evaluate_selection: window schedule not increasing");
  for (const CoverTrace& c : seq.covers()) require_admissible(c);

  Nat cycle = seq.length();
  SelectionVerdict v;
  v.mode = mode;
  v.points = seq.points();
  for (std::size_t px = 0; px < v.points.size(); ++px) {
    EPSet hits;  // empty
    for (Nat i = 0; i < cycle; ++i) {
      const EPSet& tr = seq.covers()[i].trace(px);
      EPSet sub = wants_windows
                      ? detail::window_hit_set(tr, schedule.fn, i, cycle)
                      : member_set(restrict_progression(schedule.fn, i, cycle), tr);
      hits = unite(hits, detail::embed_progression(sub, i, cycle));
    }
    v.hit_sets.push_back(std::move(hits));
  }
  v.tags = [&] {
    CoverTags t;
    t.large = std::all_of(v.hit_sets.begin(), v.hit_sets.end(),
                          [](const EPSet& a) { return a.infinite(); });
    t.gamma = std::all_of(v.hit_sets.begin(), v.hit_sets.end(),
                          [](const EPSet& a) { return a.cofinite(); });
    EPSet meet = v.hit_sets.front();
    for (std::size_t i = 1; i < v.hit_sets.size(); ++i) meet = intersect(meet, v.hit_sets[i]);
    t.omega_rel = meet.infinite();
    return t;
  }();
  return v;
}

}  // namespace omegalab
