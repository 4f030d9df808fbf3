#pragma once

// Brute-force truncation oracles for the unit tests: plain loops over
// memberships and evaluations, independent of the library's periodic
// alignment machinery.

#include <vector>

#include "omegalab/epset.hpp"
#include "omegalab/qafun.hpp"

namespace brute {

using omegalab::EPSet;
using omegalab::Nat;
using omegalab::QAFun;

inline std::vector<Nat> elements(const EPSet& a, Nat bound) {
  std::vector<Nat> out;
  for (Nat n = 0; n < bound; ++n)
    if (a.member(n)) out.push_back(n);
  return out;
}

inline bool sets_agree_below(const EPSet& a, const EPSet& b, Nat bound) {
  for (Nat n = 0; n < bound; ++n)
    if (a.member(n) != b.member(n)) return false;
  return true;
}

/// Window-hit rounds of the compression, by direct scan.
inline std::vector<Nat> compress(const EPSet& a, const QAFun& h, Nat rounds) {
  std::vector<Nat> out;
  for (Nat n = 0; n < rounds; ++n) {
    bool hit = false;
    for (Nat z = h.eval(n); z < h.eval(n + 1) && !hit; ++z)
      if (a.member(z)) hit = true;
    if (hit) out.push_back(n);
  }
  return out;
}

inline bool fun_equals_below(const QAFun& f, const std::vector<Nat>& values) {
  for (Nat n = 0; n < values.size(); ++n)
    if (f.eval(n) != values[n]) return false;
  return true;
}

}  // namespace brute
