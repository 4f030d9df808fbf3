#include "omegalab/gen.hpp"

namespace omegalab {

namespace detail {

EPSet gen_epset_with(Rng& rng, const GenParams& p) {
  Nat start = rng.below(p.max_start + 1);
  Nat period = rng.range(1, p.max_period);
  std::vector<Nat> pattern;
  for (Nat r = 0; r < period; ++r)
    if (rng.chance(p.pattern_density_permille)) pattern.push_back(r);
  if (pattern.empty()) pattern.push_back(rng.below(period));  // stay infinite
  std::vector<Nat> prefix;
  Nat prefix_count = std::min<Nat>(p.max_prefix, start);
  for (Nat i = 0; i < prefix_count; ++i)
    if (rng.chance(500)) prefix.push_back(rng.below(start));
  return EPSet::from_parts(std::move(prefix), start, period, std::move(pattern));
}

QAFun gen_qafun_with(Rng& rng, const GenParams& p) {
  Nat table_len = rng.below(p.max_table + 1);
  std::vector<Nat> table;
  for (Nat i = 0; i < table_len; ++i) table.push_back(rng.below(p.max_value + 1));
  Nat period = rng.range(1, p.max_period);
  Nat incr = rng.chance(200) ? 0 : rng.range(p.min_slope, p.max_slope);
  std::vector<Nat> base;
  for (Nat i = 0; i < period; ++i) base.push_back(rng.below(p.max_value + 1));
  return QAFun::from_parts(std::move(table), incr, std::move(base));
}

QAFun gen_increasing_qafun_with(Rng& rng, const GenParams& p) {
  // Build by strictly positive jumps so increase holds everywhere, including
  // the table/base junction and the period wrap.
  Nat table_len = rng.below(p.max_table + 1);
  Nat period = rng.range(1, p.max_period);
  Nat v = rng.below(p.max_value + 1);
  std::vector<Nat> table;
  for (Nat i = 0; i < table_len; ++i) {
    table.push_back(v);
    v += rng.range(1, 4);
  }
  std::vector<Nat> base;
  for (Nat i = 0; i < period; ++i) {
    base.push_back(v);
    v += rng.range(1, 4);
  }
  Nat wrap_gap = base.back() - base.front();
  Nat incr = wrap_gap + rng.range(1, p.max_slope);
  return QAFun::from_parts(std::move(table), incr, std::move(base));
}

QAFun gen_monotone_qafun_with(Rng& rng, const GenParams& p) {
  Nat table_len = rng.below(p.max_table + 1);
  Nat period = rng.range(1, p.max_period);
  Nat v = rng.below(p.max_value + 1);
  std::vector<Nat> table;
  for (Nat i = 0; i < table_len; ++i) {
    table.push_back(v);
    v += rng.below(3);
  }
  std::vector<Nat> base;
  for (Nat i = 0; i < period; ++i) {
    base.push_back(v);
    v += rng.below(3);
  }
  Nat wrap_gap = base.back() - base.front();
  Nat incr = wrap_gap + rng.below(p.max_slope + 1);
  return QAFun::from_parts(std::move(table), incr, std::move(base));
}

}  // namespace detail

EPSet gen_epset(const GenParams& p, Nat index) {
  Rng rng = Rng::for_case(p.seed, index);
  return detail::gen_epset_with(rng, p);
}

QAFun gen_qafun(const GenParams& p, Nat index) {
  Rng rng = Rng::for_case(p.seed, index);
  return detail::gen_qafun_with(rng, p);
}

QAFun gen_increasing_qafun(const GenParams& p, Nat index) {
  Rng rng = Rng::for_case(p.seed, index);
  return detail::gen_increasing_qafun_with(rng, p);
}

QAFun gen_monotone_qafun(const GenParams& p, Nat index) {
  Rng rng = Rng::for_case(p.seed, index);
  return detail::gen_monotone_qafun_with(rng, p);
}

std::vector<EPSet> gen_family(const GenParams& p, Nat index) {
  Rng rng = Rng::for_case(p.seed, index);
  Nat count = rng.range(1, p.max_family);
  std::vector<EPSet> out;
  out.reserve(count);
  for (Nat i = 0; i < count; ++i) out.push_back(detail::gen_epset_with(rng, p));
  return out;
}

TestBattery gen_battery(const GenParams& p, Nat index) {
  Rng rng = Rng::for_case(p.seed, index);
  Nat count = rng.range(1, p.battery_size);
  std::vector<EPSet> out;
  out.reserve(count);
  for (Nat i = 0; i < count; ++i) out.push_back(detail::gen_epset_with(rng, p));
  return TestBattery::of(std::move(out));
}

CoverTrace gen_cover(const GenParams& p, Nat index) {
  Rng rng = Rng::for_case(p.seed, index);
  Nat count = rng.range(1, p.max_family);
  std::vector<std::pair<std::string, EPSet>> entries;
  for (Nat i = 0; i < count; ++i)
    entries.emplace_back("p" + std::to_string(i), detail::gen_epset_with(rng, p));
  return CoverTrace::of(std::move(entries));
}

}  // namespace omegalab
