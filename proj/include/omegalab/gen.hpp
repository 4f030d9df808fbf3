#pragma once

#include <vector>

#include "omegalab/covers.hpp"
#include "omegalab/epset.hpp"
#include "omegalab/families.hpp"
#include "omegalab/numeric.hpp"
#include "omegalab/qafun.hpp"

namespace omegalab {

/// splitmix64. One fixed generator so a (seed, case) pair addresses the same
/// case stream on every run; per-case states are derived by jumping the seed
/// by case_index + 1 gammas.
class Rng {
 public:
  explicit Rng(Nat state) : state_(state) {}
  static Rng for_case(Nat seed, Nat case_index) {
    return Rng(seed + kGamma * (case_index + 1));
  }

  Nat next() {
    Nat z = (state_ += kGamma);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n); n >= 1.
  Nat below(Nat n) { return next() % n; }
  /// Uniform in [lo, hi] inclusive.
  Nat range(Nat lo, Nat hi) { return lo + below(hi - lo + 1); }
  /// True with probability permille/1000.
  bool chance(Nat permille) { return below(1000) < permille; }

 private:
  static constexpr Nat kGamma = 0x9E3779B97F4A7C15ULL;
  Nat state_;
};

/// Knobs for the seeded generators. Identical params give identical values.
struct GenParams {
  Nat seed = 1;
  Nat cases = 1000;
  Nat max_start = 10;
  Nat max_period = 8;
  Nat max_prefix = 3;
  Nat pattern_density_permille = 450;
  Nat max_table = 3;
  Nat max_value = 24;
  Nat min_slope = 1;
  Nat max_slope = 6;
  Nat max_family = 3;
  Nat battery_size = 3;
};

/// Infinite canonical EPSet, deterministic in (params.seed, index).
EPSet gen_epset(const GenParams& p, Nat index);

/// General QAFun (incr may be 0).
QAFun gen_qafun(const GenParams& p, Nat index);

/// Strictly increasing QAFun.
QAFun gen_increasing_qafun(const GenParams& p, Nat index);

/// Nondecreasing QAFun.
QAFun gen_monotone_qafun(const GenParams& p, Nat index);

std::vector<EPSet> gen_family(const GenParams& p, Nat index);
TestBattery gen_battery(const GenParams& p, Nat index);
CoverTrace gen_cover(const GenParams& p, Nat index);

namespace detail {
EPSet gen_epset_with(Rng& rng, const GenParams& p);
QAFun gen_qafun_with(Rng& rng, const GenParams& p);
QAFun gen_increasing_qafun_with(Rng& rng, const GenParams& p);
QAFun gen_monotone_qafun_with(Rng& rng, const GenParams& p);
}  // namespace detail

}  // namespace omegalab
