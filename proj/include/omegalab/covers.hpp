#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "omegalab/compression.hpp"
#include "omegalab/epset.hpp"
#include "omegalab/qafun.hpp"

namespace omegalab {

/// A cover over a finite point sample, encoded by traces: for each sampled
/// point x, the set {n : x is in the n-th cover member}. Traces may be
/// finite; operations that need admissibility reject empty traces.
class CoverTrace {
 public:
  static CoverTrace of(std::vector<std::pair<std::string, EPSet>> entries);

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::vector<EPSet>& traces() const { return traces_; }
  const EPSet& trace(std::size_t i) const { return traces_[i]; }
  const EPSet& trace(const std::string& label) const;

  bool operator==(const CoverTrace&) const = default;

 private:
  std::vector<std::string> points_;
  std::vector<EPSet> traces_;
};

struct CoverTags {
  bool large = false;
  bool gamma = false;
  bool omega_rel = false;
  bool operator==(const CoverTags&) const = default;
};

/// large: every trace infinite. gamma: every trace cofinite. omega_rel: the
/// intersection over every nonempty point subset is infinite (equivalently,
/// over all points). Throws EmptyTraceError on inadmissible covers.
CoverTags classify_cover(const CoverTrace& cover);

/// Replaces members by window unions: the new trace of x is exactly the
/// compression trace(x)/h.
CoverTrace glue_cover(const CoverTrace& cover, const QAFun& h);

/// s splits the cover into two large halves on the sample.
bool split_cover(const CoverTrace& cover, const EPSet& s);

/// A partition of the member indices into finite pieces, derived from a
/// compressor h. Case2: the glued pieces form a gamma-cover on the sample.
/// Case1: every piece [selector(n), selector(n+1)) covers the sample.
struct GluePartition {
  enum class Mode { Case1, Case2 };
  Mode mode;
  QAFun h;
  std::optional<QAFun> selector;  // Case1 only; selector(0) = 0, strictly increasing

  bool reverify(const CoverTrace& cover) const;
};

/// With the built-in slalom the full-window set is cofinite and Case2
/// applies; a forced compressor can exhibit Case1. Throws
/// WitnessInvalidError if the forced compressor admits only finitely many
/// full windows.
GluePartition gamma_glueable(const CoverTrace& cover);
GluePartition gamma_glueable(const CoverTrace& cover, const QAFun& forced_h);

/// Finitely many covers over one point sample, played cyclically: round k
/// uses cover k mod L.
class CoverSequence {
 public:
  static CoverSequence of(std::vector<CoverTrace> covers);
  std::size_t length() const { return covers_.size(); }
  const std::vector<CoverTrace>& covers() const { return covers_; }
  const std::vector<std::string>& points() const { return covers_.front().points(); }
  bool operator==(const CoverSequence&) const = default;

 private:
  std::vector<CoverTrace> covers_;
};

enum class SelectionMode { S1, Sfin, Ufin };

/// One-pick rounds take member p(k); window rounds take members
/// [h(k), h(k+1)).
struct PickSchedule {
  enum class Kind { Picks, Windows };
  Kind kind;
  QAFun fn;

  static PickSchedule picks(QAFun p) { return {Kind::Picks, std::move(p)}; }
  static PickSchedule windows(QAFun h) { return {Kind::Windows, std::move(h)}; }
};

struct SelectionVerdict {
  SelectionMode mode;
  std::vector<std::string> points;
  std::vector<EPSet> hit_sets;  // rounds in which each point was captured
  CoverTags tags;
};

const char* to_string(SelectionMode mode);

/// Exact infinite-game verdict: per-point hit sets over rounds, tagged with
/// the classify semantics. S1 takes a Picks schedule; Sfin and Ufin take an
/// increasing Windows schedule.
SelectionVerdict evaluate_selection(const CoverSequence& seq, const PickSchedule& schedule,
                                    SelectionMode mode);

namespace detail {

/// {offset + step*t : t in s} as an exact EPSet.
EPSet embed_progression(const EPSet& s, Nat offset, Nat step);

}  // namespace detail

}  // namespace omegalab
