#include "omegalab/qafun.hpp"

#include <algorithm>
#include <numeric>

namespace omegalab {

namespace {

// q_f/m_f vs q_g/m_g without overflow.
int slope_cmp(const QAFun& f, const QAFun& g) {
  unsigned __int128 lhs = (unsigned __int128)f.incr() * g.period();
  unsigned __int128 rhs = (unsigned __int128)g.incr() * f.period();
  return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

Nat min_of(const std::vector<Nat>& v) { return *std::min_element(v.begin(), v.end()); }

}  // namespace

QAFun QAFun::from_parts(std::vector<Nat> table, Nat incr, std::vector<Nat> base) {
  if (base.empty()) throw std::invalid_argument("QAFun: base must be nonempty");

  // Minimal period: smallest divisor of |base| that tiles base with the
  // proportional increment.
  Nat m = base.size();
  for (Nat d = 1; d < m; ++d) {
    if (m % d != 0 || (incr * d) % m != 0) continue;
    Nat step = incr * d / m;
    bool ok = true;
    for (Nat i = 0; i + d < m && ok; ++i)
      if (base[i + d] != base[i] + step) ok = false;
    if (ok) {
      base.resize(d);
      incr = step;
      m = d;
      break;
    }
  }

  // Minimal start: absorb table entries that already obey the tail rule.
  while (!table.empty() && base[m - 1] == table.back() + incr) {
    base.insert(base.begin(), table.back());
    base.pop_back();
    table.pop_back();
  }

  QAFun f;
  f.table_ = std::move(table);
  f.incr_ = incr;
  f.base_ = std::move(base);
  return f;
}

QAFun QAFun::constant(Nat c) { return from_parts({}, 0, {c}); }

QAFun QAFun::linear(Nat slope, Nat offset) { return from_parts({}, slope, {offset}); }

QAFun QAFun::identity() { return linear(1, 0); }

Nat QAFun::eval(Nat n) const {
  Nat s = table_.size();
  if (n < s) return table_[n];
  Nat i = n - s;
  Nat m = base_.size();
  return base_[i % m] + incr_ * (i / m);
}

bool QAFun::increasing() const {
  Nat window = table_.size() + base_.size();
  for (Nat i = 0; i < window; ++i)
    if (eval(i + 1) <= eval(i)) return false;
  return true;
}

bool QAFun::nondecreasing() const {
  Nat window = table_.size() + base_.size();
  for (Nat i = 0; i < window; ++i)
    if (eval(i + 1) < eval(i)) return false;
  return true;
}

QAFun compose(const QAFun& g, const QAFun& f) {
  Nat mf = f.period(), qf = f.incr();
  Nat L, big_q, n0;
  if (qf == 0) {
    // Bounded tail: values of f cycle exactly, so does g after them.
    L = mf;
    big_q = 0;
    n0 = f.start();
  } else {
    L = checked_mul(mf, g.period() / std::gcd(qf, g.period()));
    if (L > kWindowLimit) throw std::overflow_error("compose: period blowup");
    Nat arg_advance = qf * (L / mf);  // multiple of g.period()
    big_q = checked_mul(g.incr(), arg_advance / g.period());
    Nat j0 = g.start() > min_of(f.base()) ? ceil_div(g.start() - min_of(f.base()), qf) : 0;
    n0 = checked_add(f.start(), checked_mul(mf, j0));
  }
  std::vector<Nat> table;
  table.reserve(n0);
  for (Nat n = 0; n < n0; ++n) table.push_back(g.eval(f.eval(n)));
  std::vector<Nat> base;
  base.reserve(L);
  for (Nat i = 0; i < L; ++i) base.push_back(g.eval(f.eval(n0 + i)));
  return QAFun::from_parts(std::move(table), big_q, std::move(base));
}

QAFun pointwise_max(std::span<const QAFun> fs) {
  if (fs.empty()) throw std::invalid_argument("pointwise_max: empty family");
  Nat period = 1, start = 0;
  for (const QAFun& f : fs) {
    period = lcm_checked(period, f.period());
    start = std::max(start, f.start());
  }
  std::vector<Nat> per_period(fs.size());  // increment per aligned period
  Nat max_q = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    per_period[i] = fs[i].incr() * (period / fs[i].period());
    max_q = std::max(max_q, per_period[i]);
  }

  // Horizon after which the winning slope dominates on every residue class.
  Nat k_max = 0;
  for (Nat r = 0; r < period; ++r) {
    std::size_t w = 0;
    for (std::size_t i = 1; i < fs.size(); ++i) {
      Nat ai = fs[i].eval(start + r), aw = fs[w].eval(start + r);
      if (per_period[i] > per_period[w] ||
          (per_period[i] == per_period[w] && ai > aw))
        w = i;
    }
    Nat aw = fs[w].eval(start + r);
    for (std::size_t j = 0; j < fs.size(); ++j) {
      if (per_period[j] >= per_period[w]) continue;
      Nat aj = fs[j].eval(start + r);
      if (aj > aw)
        k_max = std::max(k_max, ceil_div(aj - aw, per_period[w] - per_period[j]) + 1);
    }
  }

  Nat n0 = checked_add(start, checked_mul(period, k_max));
  auto max_at = [&](Nat n) {
    Nat v = fs[0].eval(n);
    for (std::size_t i = 1; i < fs.size(); ++i) v = std::max(v, fs[i].eval(n));
    return v;
  };
  std::vector<Nat> table;
  table.reserve(n0);
  for (Nat n = 0; n < n0; ++n) table.push_back(max_at(n));
  std::vector<Nat> base;
  base.reserve(period);
  for (Nat i = 0; i < period; ++i) base.push_back(max_at(n0 + i));
  return QAFun::from_parts(std::move(table), max_q, std::move(base));
}

QAFun restrict_progression(const QAFun& f, Nat offset, Nat step) {
  if (step == 0) throw std::invalid_argument("restrict_progression: step must be >= 1");
  Nat mf = f.period();
  Nat sub_period = mf / std::gcd(step, mf);
  Nat sub_incr = f.incr() * (checked_mul(step, sub_period) / mf);
  Nat t0 = f.start() > offset ? ceil_div(f.start() - offset, step) : 0;
  std::vector<Nat> table;
  table.reserve(t0);
  for (Nat t = 0; t < t0; ++t) table.push_back(f.eval(offset + step * t));
  std::vector<Nat> base;
  base.reserve(sub_period);
  for (Nat i = 0; i < sub_period; ++i) base.push_back(f.eval(offset + step * (t0 + i)));
  return QAFun::from_parts(std::move(table), sub_incr, std::move(base));
}

QAFun shift(const QAFun& f, Nat t) { return restrict_progression(f, t, 1); }

QAFun add_constant(const QAFun& f, Nat c) {
  std::vector<Nat> table = f.table();
  std::vector<Nat> base = f.base();
  for (Nat& v : table) v = checked_add(v, c);
  for (Nat& v : base) v = checked_add(v, c);
  return QAFun::from_parts(std::move(table), f.incr(), std::move(base));
}

bool le_star(const QAFun& f, const QAFun& g) {
  int c = slope_cmp(f, g);
  if (c != 0) return c < 0;
  Nat period = lcm_checked(f.period(), g.period());
  Nat start = std::max(f.start(), g.start());
  for (Nat r = 0; r < period; ++r)
    if (f.eval(start + r) > g.eval(start + r)) return false;
  return true;
}

EPSet le_set(const QAFun& f, const QAFun& g, bool strict) {
  Nat period = lcm_checked(f.period(), g.period());
  Nat qf = f.incr() * (period / f.period());
  Nat qg = g.incr() * (period / g.period());
  Nat start = std::max(f.start(), g.start());
  Nat k_max = 0;
  if (qf != qg) {
    Nat gap = qf > qg ? qf - qg : qg - qf;
    for (Nat r = 0; r < period; ++r) {
      Nat a = f.eval(start + r), b = g.eval(start + r);
      Nat diff = a > b ? a - b : b - a;
      k_max = std::max(k_max, diff / gap + 2);
    }
  }
  Nat n0 = checked_add(start, checked_mul(period, k_max));
  return EPSet::from_eventual_predicate(
      [&](Nat n) {
        Nat x = f.eval(n), y = g.eval(n);
        return strict ? x < y : x <= y;
      },
      n0, period);
}

EPSet equal_set(const QAFun& f, const QAFun& g) {
  return intersect(le_set(f, g, false), le_set(g, f, false));
}

EPSet member_set(const QAFun& f, const EPSet& a) {
  Nat mf = f.period(), qf = f.incr();
  Nat period, n0;
  if (qf == 0) {
    period = mf;
    n0 = f.start();
  } else {
    Nat p = a.period();
    period = checked_mul(mf, p / std::gcd(qf, p));
    if (period > kWindowLimit) throw std::overflow_error("member_set: period blowup");
    Nat j0 = a.start() > min_of(f.base()) ? ceil_div(a.start() - min_of(f.base()), qf) : 0;
    n0 = checked_add(f.start(), checked_mul(mf, j0));
  }
  return EPSet::from_eventual_predicate(
      [&](Nat n) { return a.member(f.eval(n)); }, n0, period);
}

EPSet image_set(const QAFun& f) {
  if (!f.increasing()) throw NotIncreasingError("image_set: function not strictly increasing");
  Nat q = f.incr();
  Nat start = f.base()[0];
  std::vector<Nat> pattern;
  pattern.reserve(f.base().size());
  for (Nat v : f.base()) pattern.push_back(v - start);  // all within [0, q)
  return EPSet::from_parts(f.table(), start, q, std::move(pattern));
}

QAFun enumeration(const EPSet& a) {
  if (!a.infinite()) throw FiniteSetError("enumeration: set is finite");
  std::vector<Nat> base;
  base.reserve(a.pattern().size());
  for (Nat r : a.pattern()) base.push_back(a.start() + r);
  return QAFun::from_parts(a.prefix(), a.period(), std::move(base));
}

StrandFun::StrandFun(std::vector<QAFun> strands) : strands_(std::move(strands)) {
  if (strands_.empty()) throw std::invalid_argument("StrandFun: needs at least one strand");
}

bool eq_infinitely_often(const StrandFun& g, const QAFun& f) {
  Nat k = g.strand_count();
  for (Nat i = 0; i < k; ++i) {
    QAFun u = restrict_progression(g.strand(i), i, k);
    QAFun v = restrict_progression(f, i, k);
    if (equal_set(u, v).infinite()) return true;
  }
  return false;
}

}  // namespace omegalab
