#pragma once

#include <span>
#include <vector>

#include "omegalab/epset.hpp"
#include "omegalab/qafun.hpp"

namespace omegalab {

/// a/h = {n : a meets [h(n), h(n+1))}, exact. Requires a infinite and h
/// strictly increasing.
EPSet compress_set(const EPSet& a, const QAFun& h);

/// Element-wise a/h over a family, deduplicated by canonical form.
std::vector<EPSet> compress_family(std::span<const EPSet> family, const QAFun& h);

/// h is a slalom for the family: every a/h is cofinite.
bool is_slalom(const QAFun& h, std::span<const EPSet> family);

/// h(n) = G*n with G the largest tail gap bound in the family; always a
/// slalom for it.
QAFun build_slalom(std::span<const EPSet> family);

/// The compressed family generates the cofinite sets, i.e. h is a slalom.
bool frechet_after(std::span<const EPSet> family, const QAFun& h);

/// Classification of a compressed family against a finite test battery.
/// Verdicts are battery-relative by construction; the certificate carries
/// enough data to re-run the defining checks.
struct TrichotomyVerdict {
  enum class Tag { Frechet, UltraLike, FullLike, Unclassified };

  struct Decision {
    std::size_t test;        // index into the battery
    std::size_t generator;   // index into the compressed family
    bool complement_side;    // generator almost inside the test's complement
  };

  Tag tag = Tag::Unclassified;
  QAFun h;
  std::vector<EPSet> compressed;
  std::vector<Decision> table;  // covering table (FullLike) or decisiveness table (UltraLike)

  /// Re-runs the checks the tag claims, from the stored certificate.
  bool reverify(std::span<const EPSet> family, std::span<const EPSet> tests) const;
};

const char* to_string(TrichotomyVerdict::Tag tag);

TrichotomyVerdict classify_trichotomy(std::span<const EPSet> family, const QAFun& h,
                                      std::span<const EPSet> tests);

namespace detail {

/// {t : a meets [h(offset + step*t), h(offset + step*t + 1))}, total in a
/// (finite a allowed). Exact; shared by compression, covers and games.
EPSet window_hit_set(const EPSet& a, const QAFun& h, Nat offset, Nat step);

}  // namespace detail

}  // namespace omegalab
