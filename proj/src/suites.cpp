#include "omegalab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "omegalab/compression.hpp"
#include "omegalab/constructions.hpp"
#include "omegalab/covers.hpp"
#include "omegalab/families.hpp"
#include "omegalab/lazy.hpp"
#include "omegalab/textio.hpp"

namespace omegalab {

std::string SuiteReport::text() const {
  std::string out = "suite: " + suite + "\n";
  out += "cases: " + std::to_string(cases) + "\n";
  out += "failures: " + std::to_string(failures.size()) + "\n";
  for (const SuiteFailure& f : failures)
    out += "failure case=" + std::to_string(f.case_index) + " property=" + f.property +
           " counterexample=" + f.counterexample + "\n";
  return out;
}

nlohmann::json SuiteReport::json() const {
  nlohmann::json fs = nlohmann::json::array();
  for (const SuiteFailure& f : failures)
    fs.push_back({{"case", f.case_index},
                  {"property", f.property},
                  {"counterexample", f.counterexample}});
  return {{"suite", suite}, {"cases", cases}, {"failures", fs}};
}

std::string describe_case(const CaseData& data) {
  std::string out = "sets=[";
  for (std::size_t i = 0; i < data.sets.size(); ++i) {
    if (i) out += ";";
    out += serialize(data.sets[i]);
  }
  out += "] fns=[";
  for (std::size_t i = 0; i < data.fns.size(); ++i) {
    if (i) out += ";";
    out += serialize(data.fns[i]);
  }
  out += "] nums=[";
  for (std::size_t i = 0; i < data.nums.size(); ++i) {
    if (i) out += ";";
    out += std::to_string(data.nums[i]);
  }
  return out + "]";
}

namespace {

bool still_fails(const CaseProperty& holds, const CaseData& d) {
  try {
    return !holds(d);
  } catch (...) {
    return false;  // invalid candidate, not a counterexample
  }
}

std::vector<EPSet> set_reductions(const EPSet& s) {
  std::vector<EPSet> out;
  auto push = [&](std::vector<Nat> prefix, Nat start, Nat period, std::vector<Nat> pattern) {
    try {
      EPSet cand = EPSet::from_parts(std::move(prefix), start, period, std::move(pattern));
      if (cand != s) out.push_back(std::move(cand));
    } catch (...) {
    }
  };
  for (std::size_t i = 0; i < s.prefix().size(); ++i) {
    auto pf = s.prefix();
    pf.erase(pf.begin() + i);
    push(pf, s.start(), s.period(), s.pattern());
  }
  if (s.start() > 0) {
    Nat ns = s.start() / 2;
    std::vector<Nat> pf;
    for (Nat x : s.prefix())
      if (x < ns) pf.push_back(x);
    push(pf, ns, s.period(), s.pattern());
  }
  for (Nat d = 1; d < s.period(); ++d) {
    if (s.period() % d != 0) continue;
    std::vector<Nat> pat;
    for (Nat r : s.pattern())
      if (r < d) pat.push_back(r);
    if (pat.empty()) continue;  // keep shrunk sets infinite
    push(s.prefix(), s.start(), d, pat);
  }
  if (s.pattern().size() > 1)
    for (std::size_t i = 0; i < s.pattern().size(); ++i) {
      auto pat = s.pattern();
      pat.erase(pat.begin() + i);
      push(s.prefix(), s.start(), s.period(), pat);
    }
  return out;
}

std::vector<QAFun> fn_reductions(const QAFun& f) {
  std::vector<QAFun> out;
  auto push = [&](std::vector<Nat> table, Nat incr, std::vector<Nat> base) {
    try {
      QAFun cand = QAFun::from_parts(std::move(table), incr, std::move(base));
      if (cand != f) out.push_back(std::move(cand));
    } catch (...) {
    }
  };
  if (!f.table().empty()) {
    auto t = f.table();
    t.pop_back();
    push(t, f.incr(), f.base());
    push({}, f.incr(), f.base());
  }
  for (Nat d = 1; d < f.period(); ++d) {
    if (f.period() % d != 0) continue;
    std::vector<Nat> b(f.base().begin(), f.base().begin() + d);
    push(f.table(), f.incr(), b);
  }
  if (f.incr() > 1) push(f.table(), f.incr() / 2, f.base());
  {
    auto t = f.table();
    auto b = f.base();
    bool any = false;
    for (Nat& v : t)
      if (v > 0) {
        v /= 2;
        any = true;
      }
    for (Nat& v : b)
      if (v > 0) {
        v /= 2;
        any = true;
      }
    if (any) push(t, f.incr(), b);
  }
  return out;
}

}  // namespace

CaseData shrink_case(CaseData data, const CaseProperty& holds) {
  for (int guard = 0; guard < 200; ++guard) {
    bool progress = false;
    for (std::size_t i = 0; i < data.sets.size() && !progress; ++i)
      for (const EPSet& cand : set_reductions(data.sets[i])) {
        CaseData trial = data;
        trial.sets[i] = cand;
        if (still_fails(holds, trial)) {
          data = std::move(trial);
          progress = true;
          break;
        }
      }
    for (std::size_t i = 0; i < data.fns.size() && !progress; ++i)
      for (const QAFun& cand : fn_reductions(data.fns[i])) {
        CaseData trial = data;
        trial.fns[i] = cand;
        if (still_fails(holds, trial)) {
          data = std::move(trial);
          progress = true;
          break;
        }
      }
    for (std::size_t i = 0; i < data.nums.size() && !progress; ++i) {
      if (data.nums[i] == 0) continue;
      CaseData trial = data;
      trial.nums[i] /= 2;
      if (still_fails(holds, trial)) {
        data = std::move(trial);
        progress = true;
      }
    }
    if (!progress) break;
  }
  return data;
}

namespace {

constexpr std::size_t kFailureCap = 5;

class SuiteRun {
 public:
  SuiteRun(std::string name, const GenParams& params) : params_(params) {
    report_.suite = std::move(name);
  }

  const GenParams& params() const { return params_; }
  bool capped() const { return report_.failures.size() >= kFailureCap; }
  void count_case() { ++report_.cases; }

  /// Evaluates a named property; on failure shrinks and records.
  void check(Nat case_index, const std::string& property, const CaseData& data,
             const CaseProperty& prop) {
    if (capped()) return;
    bool ok;
    try {
      ok = prop(data);
    } catch (const std::exception& e) {
      report_.failures.push_back(
          {case_index, property + " (raised " + std::string(e.what()) + ")",
           describe_case(data)});
      return;
    }
    if (ok) return;
    CaseData shrunk = shrink_case(data, prop);
    report_.failures.push_back({case_index, property, describe_case(shrunk)});
  }

  /// For checks whose inputs are not CaseData-shaped.
  void check_flat(Nat case_index, const std::string& property, bool ok,
                  const std::string& note) {
    if (capped()) return;
    if (!ok) report_.failures.push_back({case_index, property, note});
  }

  SuiteReport finish() { return std::move(report_); }

 private:
  GenParams params_;
  SuiteReport report_;
};

GenParams with_index_offset(const GenParams& p, Nat salt) {
  GenParams q = p;
  q.seed = p.seed ^ (0xA5A5A5A5A5A5A5A5ULL * (salt + 1));
  return q;
}

// ---------------------------------------------------------------------------
// oracle-epsets

void suite_oracle_epsets(SuiteRun& run) {
  const GenParams& p = run.params();
  for (Nat i = 0; i < p.cases && !run.capped(); ++i) {
    run.count_case();
    Rng rng = Rng::for_case(p.seed, i);

    // Raw, possibly non-canonical fields; membership must survive
    // canonicalization.
    Nat start = rng.below(p.max_start + 1);
    Nat period = rng.range(1, p.max_period);
    std::vector<Nat> pattern;
    for (Nat r = 0; r < period; ++r)
      if (rng.chance(p.pattern_density_permille)) pattern.push_back(r);
    std::vector<Nat> prefix;
    for (Nat x = 0; x < start; ++x)
      if (rng.chance(300)) prefix.push_back(x);
    EPSet a = EPSet::from_parts(prefix, start, period, pattern);
    bool member_ok = true;
    for (Nat n = 0; n < 4 * (start + period) + 8; ++n) {
      bool raw = n < start ? std::binary_search(prefix.begin(), prefix.end(), n)
                           : std::binary_search(pattern.begin(), pattern.end(),
                                                (n - start) % period);
      if (a.member(n) != raw) member_ok = false;
    }
    run.check_flat(i, "member matches raw fields", member_ok, serialize(a));

    EPSet b = detail::gen_epset_with(rng, p);
    Nat window = 2 * (std::max(a.start(), b.start()) + lcm_checked(a.period(), b.period())) + 64;

    CaseData data;
    data.sets = {a, b};
    data.nums = {window};
    run.check(i, "boolean algebra matches brute force", data, [](const CaseData& d) {
      const EPSet &a = d.sets[0], &b = d.sets[1];
      Nat w = d.nums[0];
      EPSet meet = intersect(a, b), join = unite(a, b), diff = difference(a, b),
            comp = complement(a);
      for (Nat n = 0; n < w; ++n) {
        bool ma = a.member(n), mb = b.member(n);
        if (meet.member(n) != (ma && mb)) return false;
        if (join.member(n) != (ma || mb)) return false;
        if (diff.member(n) != (ma && !mb)) return false;
        if (comp.member(n) != !ma) return false;
      }
      return true;
    });
    run.check(i, "almost_subset matches brute force", data, [](const CaseData& d) {
      const EPSet &a = d.sets[0], &b = d.sets[1];
      Nat w = d.nums[0];
      // The difference tail is periodic beyond w/2, so a finite difference
      // lives entirely below w.
      bool brute = true;
      for (Nat n = w / 2; n < w; ++n)
        if (a.member(n) && !b.member(n)) brute = false;
      return almost_subset(a, b) == brute;
    });
    run.check(i, "de morgan", data, [](const CaseData& d) {
      const EPSet &a = d.sets[0], &b = d.sets[1];
      return complement(unite(a, b)) == intersect(complement(a), complement(b)) &&
             complement(intersect(a, b)) == unite(complement(a), complement(b));
    });
    run.check(i, "canonicalize is idempotent", data, [](const CaseData& d) {
      const EPSet& a = d.sets[0];
      EPSet again = EPSet::from_parts(a.prefix(), a.start(), a.period(), a.pattern());
      return again == a && canonicalize(a) == a;
    });
  }
}

// ---------------------------------------------------------------------------
// oracle-qafuns

void suite_oracle_qafuns(SuiteRun& run) {
  const GenParams& p = run.params();
  for (Nat i = 0; i < p.cases && !run.capped(); ++i) {
    run.count_case();
    Rng rng = Rng::for_case(p.seed, i);
    QAFun f = detail::gen_qafun_with(rng, p);
    QAFun g = detail::gen_qafun_with(rng, p);
    QAFun h = detail::gen_qafun_with(rng, p);

    CaseData data;
    data.fns = {f, g, h};
    run.check(i, "compose matches pointwise evaluation", data, [](const CaseData& d) {
      QAFun c = compose(d.fns[1], d.fns[0]);
      Nat w = c.start() + 2 * c.period() + 64;
      for (Nat n = 0; n < w; ++n)
        if (c.eval(n) != d.fns[1].eval(d.fns[0].eval(n))) return false;
      return true;
    });
    run.check(i, "pointwise_max matches pointwise evaluation", data, [](const CaseData& d) {
      QAFun m = pointwise_max(d.fns);
      Nat w = m.start() + 2 * m.period() + 64;
      for (Nat n = 0; n < w; ++n) {
        Nat expect = std::max({d.fns[0].eval(n), d.fns[1].eval(n), d.fns[2].eval(n)});
        if (m.eval(n) != expect) return false;
      }
      return true;
    });
    run.check(i, "le_set matches pointwise comparison", data, [](const CaseData& d) {
      EPSet le = le_set(d.fns[0], d.fns[1], false);
      EPSet lt = le_set(d.fns[0], d.fns[1], true);
      Nat w = std::max(le.start(), lt.start()) + 2 * std::max(le.period(), lt.period()) + 64;
      for (Nat n = 0; n < w; ++n) {
        if (le.member(n) != (d.fns[0].eval(n) <= d.fns[1].eval(n))) return false;
        if (lt.member(n) != (d.fns[0].eval(n) < d.fns[1].eval(n))) return false;
      }
      return true;
    });
    run.check(i, "le_star agrees with le_set cofiniteness", data, [](const CaseData& d) {
      return le_star(d.fns[0], d.fns[1]) == le_set(d.fns[0], d.fns[1], false).cofinite();
    });
    run.check(i, "le_star is transitive", data, [](const CaseData& d) {
      if (le_star(d.fns[0], d.fns[1]) && le_star(d.fns[1], d.fns[2]))
        return le_star(d.fns[0], d.fns[2]);
      return true;
    });

    QAFun inc = detail::gen_increasing_qafun_with(rng, p);
    CaseData inc_data;
    inc_data.fns = {inc};
    run.check(i, "increasing implies eval(n) >= n", inc_data, [](const CaseData& d) {
      if (!d.fns[0].increasing()) return true;
      Nat w = d.fns[0].start() + 2 * d.fns[0].period() + 64;
      for (Nat n = 0; n < w; ++n)
        if (d.fns[0].eval(n) < n) return false;
      return true;
    });
    run.check(i, "image_set inverts enumeration", inc_data, [](const CaseData& d) {
      return enumeration(image_set(d.fns[0])) == d.fns[0];
    });

    EPSet s = detail::gen_epset_with(rng, p);
    CaseData set_data;
    set_data.sets = {s};
    run.check(i, "enumeration round trip", set_data, [](const CaseData& d) {
      QAFun e = enumeration(d.sets[0]);
      if (!e.increasing()) return false;
      for (Nat k = 0; k < 64; ++k)
        if (e.eval(k) != d.sets[0].nth(k)) return false;
      return image_set(e) == d.sets[0];
    });

    run.check_flat(i, "baire_to_roth stream increases", [&] {
      LazySet az = baire_to_roth(f);
      auto e1 = az.truncate(1000);
      auto e2 = az.truncate(1000);
      if (e1 != e2) return false;  // replay must be reproducible
      for (std::size_t k = 0; k + 1 < e1.size(); ++k)
        if (e1[k] >= e1[k + 1]) return false;
      return true;
    }(), serialize(f));
  }
}

// ---------------------------------------------------------------------------
// oracle-compress

void suite_oracle_compress(SuiteRun& run) {
  const GenParams& p = run.params();
  for (Nat i = 0; i < p.cases && !run.capped(); ++i) {
    run.count_case();
    Rng rng = Rng::for_case(p.seed, i);
    EPSet a = detail::gen_epset_with(rng, p);
    EPSet c = detail::gen_epset_with(rng, p);
    QAFun h = detail::gen_increasing_qafun_with(rng, p);
    QAFun k = detail::gen_increasing_qafun_with(rng, p);

    CaseData data;
    data.sets = {a, c};
    data.fns = {h, k};
    run.check(i, "compress_set matches window scan", data, [](const CaseData& d) {
      EPSet comp = compress_set(d.sets[0], d.fns[0]);
      for (Nat n = 0; n < 512; ++n) {
        bool hit = false;
        for (Nat z = d.fns[0].eval(n); z < d.fns[0].eval(n + 1) && !hit; ++z)
          if (d.sets[0].member(z)) hit = true;
        if (comp.member(n) != hit) return false;
      }
      return true;
    });
    run.check(i, "compression is almost-monotone", data, [](const CaseData& d) {
      EPSet wider = unite(d.sets[0], d.sets[1]);
      return almost_subset(compress_set(d.sets[0], d.fns[0]),
                           compress_set(wider, d.fns[0]));
    });
    run.check(i, "window coarsening composes", data, [](const CaseData& d) {
      EPSet two_step = compress_set(compress_set(d.sets[0], d.fns[0]), d.fns[1]);
      EPSet one_step = compress_set(d.sets[0], compose(d.fns[0], d.fns[1]));
      return two_step == one_step;
    });
  }
}

// ---------------------------------------------------------------------------
// slalom

void suite_slalom(SuiteRun& run) {
  const GenParams& p = run.params();
  for (Nat i = 0; i < p.cases && !run.capped(); ++i) {
    run.count_case();
    std::vector<EPSet> family = gen_family(p, i);
    Rng rng = Rng::for_case(with_index_offset(p, 1).seed, i);
    QAFun h = detail::gen_increasing_qafun_with(rng, p);

    CaseData data;
    data.sets = family;
    run.check(i, "built slalom is a slalom", data, [](const CaseData& d) {
      QAFun s = build_slalom(d.sets);
      return is_slalom(s, d.sets) && frechet_after(d.sets, s);
    });
    CaseData hdata;
    hdata.sets = family;
    hdata.fns = {h};
    run.check(i, "is_slalom means every compression cofinite", hdata,
              [](const CaseData& d) {
                bool all_cofinite = true;
                for (const EPSet& a : d.sets)
                  if (!compress_set(a, d.fns[0]).cofinite()) all_cofinite = false;
                return is_slalom(d.fns[0], d.sets) == all_cofinite;
              });
    run.check(i, "unit windows detect cofiniteness", data, [](const CaseData& d) {
      for (const EPSet& a : d.sets)
        if (is_slalom(QAFun::identity(), std::vector<EPSet>{a}) != a.cofinite())
          return false;
      return true;
    });
  }
}

// ---------------------------------------------------------------------------
// split1

void suite_split1(SuiteRun& run) {
  const GenParams& p = run.params();
  for (Nat i = 0; i < p.cases && !run.capped(); ++i) {
    run.count_case();
    std::vector<EPSet> family = gen_family(p, i);
    CaseData data;
    data.sets = family;
    run.check(i, "slalom splitter splits the family", data, [](const CaseData& d) {
      QAFun h = build_slalom(d.sets);
      return split_witness_check(d.sets, splitter_from_slalom(h));
    });
    Rng rng = Rng::for_case(with_index_offset(p, 2).seed, i);
    QAFun h = detail::gen_increasing_qafun_with(rng, p);
    CaseData hdata;
    hdata.fns = {h};
    run.check(i, "splitter matches interval scan", hdata, [](const CaseData& d) {
      EPSet s = splitter_from_slalom(d.fns[0]);
      std::vector<bool> brute(400, false);
      for (Nat n = 0;; ++n) {
        Nat lo = d.fns[0].eval(2 * n), hi = d.fns[0].eval(2 * n + 1);
        if (lo >= brute.size()) break;
        for (Nat x = lo; x < hi && x < brute.size(); ++x) brute[x] = true;
      }
      for (Nat x = 0; x < brute.size(); ++x)
        if (s.member(x) != brute[x]) return false;
      return true;
    });
  }
}

// ---------------------------------------------------------------------------
// rothsplit

void suite_rothsplit(SuiteRun& run) {
  const GenParams& p = run.params();
  for (Nat i = 0; i < p.cases && !run.capped(); ++i) {
    run.count_case();
    std::vector<EPSet> family = gen_family(p, i);
    GuesserProgram g = rothberger_guesser(family);

    bool guess_ok = true;
    for (Nat n = 1; n <= 6 && guess_ok; ++n) {
      auto got = g.guess(n);
      if (got.size() != 2 * n) guess_ok = false;
      for (std::size_t j = 0; j < got.size() && guess_ok; ++j)
        if (got[j] != family[n % family.size()].nth(j)) guess_ok = false;
    }
    run.check_flat(i, "guesser answers from the scheduled strand", guess_ok,
                   describe_case({family, {}, {}}));

    auto [I, J] = ij_from_guesser(g);
    std::vector<Nat> depths = {500, 1000, 2000};
    auto iv = I.truncate(depths.back());
    auto jv = J.truncate(depths.back());
    bool disjoint = true;
    {
      std::set<Nat> seen(iv.begin(), iv.end());
      for (Nat v : jv)
        if (seen.count(v)) disjoint = false;
    }
    run.check_flat(i, "greedy streams are disjoint", disjoint,
                   describe_case({family, {}, {}}));

    bool growing = true;
    for (const EPSet& y : family) {
      Nat prev_i = 0, prev_j = 0;
      bool first = true;
      for (Nat d : depths) {
        Nat ci = 0, cj = 0;
        for (Nat v : iv)
          if (v < d && y.member(v)) ++ci;
        for (Nat v : jv)
          if (v < d && y.member(v)) ++cj;
        if (!first && (ci <= prev_i || cj <= prev_j)) growing = false;
        prev_i = ci;
        prev_j = cj;
        first = false;
      }
    }
    run.check_flat(i, "stream meets every source with growing counts", growing,
                   describe_case({family, {}, {}}));

    bool sourced = true;
    for (Nat v : iv) {
      bool in_any = false;
      for (const EPSet& y : family)
        if (y.member(v)) in_any = true;
      if (!in_any) sourced = false;
    }
    run.check_flat(i, "picks come from the family", sourced,
                   describe_case({family, {}, {}}));
  }
}

// ---------------------------------------------------------------------------
// split4

void suite_split4(SuiteRun& run) {
  const GenParams& p = run.params();
  for (Nat i = 0; i < p.cases && !run.capped(); ++i) {
    run.count_case();
    Rng rng = Rng::for_case(p.seed, i);
    Nat count = rng.range(1, p.max_family);
    std::vector<QAFun> family;
    for (Nat j = 0; j < count; ++j) family.push_back(detail::gen_monotone_qafun_with(rng, p));
    QAFun g = add_constant(pointwise_max(family), rng.below(p.max_value + 1));
    QAFun h = detail::gen_increasing_qafun_with(rng, p);

    CaseData data;
    data.fns = family;
    data.fns.push_back(g);
    data.fns.push_back(h);
    run.check(i, "bound transfers through compression", data, [](const CaseData& d) {
      std::vector<QAFun> family(d.fns.begin(), d.fns.end() - 2);
      const QAFun& g = d.fns[d.fns.size() - 2];
      const QAFun& h = d.fns.back();
      BoundingReport r = bounding_reduction(family, g, h);
      if (!r.verifies() || !r.recheck()) return false;
      for (bool exact : r.exact_flags)
        if (!exact) return false;
      return true;
    });

    run.check_flat(i, "invalid bound witness is rejected", [&] {
      QAFun above = add_constant(g, 1);  // [above <= g] is empty
      try {
        bounding_reduction(std::vector<QAFun>{above}, g, h);
        return false;
      } catch (const WitnessInvalidError&) {
        return true;
      }
    }(), serialize(g));
  }
}

// ---------------------------------------------------------------------------
// maxfin

void suite_maxfin(SuiteRun& run) {
  GenParams p = run.params();
  // Closures are exponential in the family; keep the aligned periods small.
  p.max_period = std::min<Nat>(p.max_period, 5);
  p.max_value = std::min<Nat>(p.max_value, 16);
  for (Nat i = 0; i < p.cases && !run.capped(); ++i) {
    run.count_case();
    Rng rng = Rng::for_case(p.seed, i);
    Nat count = rng.range(1, std::min<Nat>(p.max_family, 4));
    std::vector<QAFun> family;
    for (Nat j = 0; j < count; ++j) family.push_back(detail::gen_qafun_with(rng, p));

    CaseData data;
    data.fns = family;
    run.check(i, "closure is idempotent", data, [](const CaseData& d) {
      std::vector<QAFun> core(d.fns.begin(),
                              d.fns.begin() + std::min<std::size_t>(3, d.fns.size()));
      auto once = maxfin_closure(core);
      auto twice = maxfin_closure(once);
      std::sort(once.begin(), once.end());
      std::sort(twice.begin(), twice.end());
      return once == twice;
    });
    run.check(i, "escape beats the whole closure", data, [](const CaseData& d) {
      QAFun esc = escape_function(d.fns);
      for (const QAFun& m : maxfin_closure(d.fns)) {
        if (le_star(esc, m)) return false;
        if (!le_set(esc, m, false).empty()) return false;  // strict everywhere
      }
      return true;
    });
    run.check(i, "escape bound yields a filter subbase", data, [](const CaseData& d) {
      FamilySpec sub = filter_subbase_from_bound(d.fns, escape_function(d.fns));
      return subbase_check(sub);
    });
    run.check(i, "union closure contains both closures", data, [](const CaseData& d) {
      if (d.fns.size() < 2) return true;
      std::vector<QAFun> a(d.fns.begin(), d.fns.begin() + 1);
      std::vector<QAFun> b(d.fns.begin() + 1, d.fns.end());
      auto whole = maxfin_closure(d.fns);
      auto part_a = maxfin_closure(a);
      auto part_b = maxfin_closure(b);
      auto contains = [&](const QAFun& f) {
        return std::find(whole.begin(), whole.end(), f) != whole.end();
      };
      return std::all_of(part_a.begin(), part_a.end(), contains) &&
             std::all_of(part_b.begin(), part_b.end(), contains);
    });
    run.check(i, "directed union closure is the union of closures", data,
              [](const CaseData& d) {
                // Extending a family by members of its own closure is
                // max-directed, so closures must agree as sets.
                std::vector<QAFun> core(d.fns.begin(),
                                        d.fns.begin() + std::min<std::size_t>(2, d.fns.size()));
                auto closure = maxfin_closure(core);
                std::vector<QAFun> extended = core;
                extended.insert(extended.end(), closure.begin(), closure.end());
                auto again = maxfin_closure(extended);
                std::sort(closure.begin(), closure.end());
                std::sort(again.begin(), again.end());
                return closure == again;
              });

    run.check_flat(i, "subbase rejects a dominated bound", [&] {
      QAFun low = QAFun::constant(0);
      try {
        filter_subbase_from_bound(std::vector<QAFun>{add_constant(low, 1)}, low);
        return false;
      } catch (const WitnessInvalidError&) {
        return true;
      }
    }(), "constant bound");
  }
}

// ---------------------------------------------------------------------------
// covers

void suite_covers(SuiteRun& run) {
  const GenParams& p = run.params();
  for (Nat i = 0; i < p.cases && !run.capped(); ++i) {
    run.count_case();
    CoverTrace cover = gen_cover(p, i);
    Rng rng = Rng::for_case(with_index_offset(p, 3).seed, i);
    QAFun h = detail::gen_increasing_qafun_with(rng, p);

    CaseData data;
    data.sets = cover.traces();
    data.fns = {h};
    run.check(i, "glue equals trace compression", data, [](const CaseData& d) {
      std::vector<std::pair<std::string, EPSet>> entries;
      for (std::size_t j = 0; j < d.sets.size(); ++j)
        entries.emplace_back("p" + std::to_string(j), d.sets[j]);
      CoverTrace c = CoverTrace::of(entries);
      CoverTrace glued = glue_cover(c, d.fns[0]);
      for (std::size_t j = 0; j < d.sets.size(); ++j)
        if (glued.trace(j) != compress_set(d.sets[j], d.fns[0])) return false;
      return true;
    });
    run.check(i, "built partition reverifies as Case2", data, [](const CaseData& d) {
      std::vector<std::pair<std::string, EPSet>> entries;
      for (std::size_t j = 0; j < d.sets.size(); ++j)
        entries.emplace_back("p" + std::to_string(j), d.sets[j]);
      CoverTrace c = CoverTrace::of(entries);
      GluePartition part = gamma_glueable(c);
      return part.mode == GluePartition::Mode::Case2 && part.reverify(c);
    });
    run.check(i, "forced partition reverifies or reports finite windows", data,
              [](const CaseData& d) {
                std::vector<std::pair<std::string, EPSet>> entries;
                for (std::size_t j = 0; j < d.sets.size(); ++j)
                  entries.emplace_back("p" + std::to_string(j), d.sets[j]);
                CoverTrace c = CoverTrace::of(entries);
                try {
                  GluePartition part = gamma_glueable(c, d.fns[0]);
                  return part.reverify(c);
                } catch (const WitnessInvalidError&) {
                  EPSet full = compress_set(d.sets[0], d.fns[0]);
                  for (std::size_t j = 1; j < d.sets.size(); ++j)
                    full = intersect(full, compress_set(d.sets[j], d.fns[0]));
                  return !full.infinite();
                }
              });
    run.check(i, "slalom splitter splits the cover", data, [](const CaseData& d) {
      std::vector<std::pair<std::string, EPSet>> entries;
      for (std::size_t j = 0; j < d.sets.size(); ++j)
        entries.emplace_back("p" + std::to_string(j), d.sets[j]);
      CoverTrace c = CoverTrace::of(entries);
      QAFun s = build_slalom(d.sets);
      return split_cover(c, splitter_from_slalom(s));
    });
  }
}

// ---------------------------------------------------------------------------
// selection

void suite_selection(SuiteRun& run) {
  const GenParams& p = run.params();
  for (Nat i = 0; i < p.cases && !run.capped(); ++i) {
    run.count_case();
    Rng rng = Rng::for_case(p.seed, i);
    Nat cycle = rng.range(1, 3);
    Nat points = rng.range(1, 3);
    std::vector<CoverTrace> covers;
    for (Nat j = 0; j < cycle; ++j) {
      std::vector<std::pair<std::string, EPSet>> entries;
      for (Nat px = 0; px < points; ++px)
        entries.emplace_back("p" + std::to_string(px), detail::gen_epset_with(rng, p));
      covers.push_back(CoverTrace::of(entries));
    }
    CoverSequence seq = CoverSequence::of(covers);
    QAFun picks = detail::gen_qafun_with(rng, p);
    QAFun windows = detail::gen_increasing_qafun_with(rng, p);

    auto brute_hits = [&](SelectionMode mode, const QAFun& fn, std::size_t px, Nat rounds) {
      std::vector<bool> hit(rounds, false);
      for (Nat k = 0; k < rounds; ++k) {
        const EPSet& tr = seq.covers()[k % seq.length()].trace(px);
        if (mode == SelectionMode::S1) {
          hit[k] = tr.member(fn.eval(k));
        } else {
          for (Nat z = fn.eval(k); z < fn.eval(k + 1); ++z)
            if (tr.member(z)) hit[k] = true;
        }
      }
      return hit;
    };

    SelectionVerdict v1 = evaluate_selection(seq, PickSchedule::picks(picks), SelectionMode::S1);
    SelectionVerdict vu =
        evaluate_selection(seq, PickSchedule::windows(windows), SelectionMode::Ufin);
    bool ok = true;
    for (std::size_t px = 0; px < points && ok; ++px) {
      auto b1 = brute_hits(SelectionMode::S1, picks, px, 400);
      auto bu = brute_hits(SelectionMode::Ufin, windows, px, 400);
      for (Nat k = 0; k < 400; ++k) {
        if (v1.hit_sets[px].member(k) != b1[k]) ok = false;
        if (vu.hit_sets[px].member(k) != bu[k]) ok = false;
      }
    }
    run.check_flat(i, "hit sets match round-by-round play", ok, serialize(seq));

    // The cyclic presentation is what matters: doubling the list of covers
    // changes nothing.
    std::vector<CoverTrace> doubled = seq.covers();
    doubled.insert(doubled.end(), seq.covers().begin(), seq.covers().end());
    SelectionVerdict v2 =
        evaluate_selection(CoverSequence::of(doubled), PickSchedule::picks(picks),
                           SelectionMode::S1);
    run.check_flat(i, "verdicts are cycle-invariant",
                   v1.hit_sets == v2.hit_sets && v1.tags == v2.tags, serialize(seq));

    // Constant sequence played with the built slalom always lands gamma.
    CoverTrace single = gen_cover(p, i);
    CoverSequence constant = CoverSequence::of({single});
    QAFun slalom = build_slalom(single.traces());
    SelectionVerdict vs =
        evaluate_selection(constant, PickSchedule::windows(slalom), SelectionMode::Ufin);
    run.check_flat(i, "built slalom forces gamma", vs.tags.gamma, serialize(single));
  }
}

// ---------------------------------------------------------------------------
// roundtrip

void suite_roundtrip(SuiteRun& run) {
  const GenParams& p = run.params();
  for (Nat i = 0; i < p.cases && !run.capped(); ++i) {
    run.count_case();
    Rng rng = Rng::for_case(p.seed, i);
    EPSet a = detail::gen_epset_with(rng, p);
    QAFun f = detail::gen_qafun_with(rng, p);
    QAFun inc = detail::gen_increasing_qafun_with(rng, p);

    run.check_flat(i, "epset text round trip", parse_epset(serialize(a)) == a, serialize(a));
    run.check_flat(i, "qafun text round trip", parse_qafun(serialize(f)) == f, serialize(f));
    run.check_flat(i, "epset json round trip", epset_from_json(to_json(a)) == a, serialize(a));
    run.check_flat(i, "qafun json round trip", qafun_from_json(to_json(f)) == f, serialize(f));

    StrandFun strands({f, inc});
    run.check_flat(i, "strandfun text round trip",
                   parse_strandfun(serialize(strands)) == strands, serialize(strands));

    FamilyDocument doc;
    doc.family = FamilySpec::of(gen_family(p, i), FamilySpec::Claim::SemifilterBase);
    if (rng.chance(500)) doc.battery = gen_battery(with_index_offset(p, 5), i);
    run.check_flat(i, "family document round trip",
                   parse_family_document(serialize(doc)) == doc, serialize(doc));

    std::vector<CoverTrace> covers;
    Nat cycle = rng.range(1, 3);
    for (Nat j = 0; j < cycle; ++j) {
      std::vector<std::pair<std::string, EPSet>> entries;
      for (Nat px = 0; px < 2; ++px)
        entries.emplace_back("p" + std::to_string(px),
                             detail::gen_epset_with(rng, p));
      covers.push_back(CoverTrace::of(entries));
    }
    CoverSequence seq = CoverSequence::of(covers);
    run.check_flat(i, "cover document round trip",
                   parse_cover_document(serialize(seq)) == seq, serialize(seq));

    LazyTruncation t = take_truncation(baire_to_roth(f), 200 + rng.below(200));
    run.check_flat(i, "truncation round trip", parse_truncation(serialize(t)) == t,
                   serialize(t));

    run.check_flat(i, "enumeration and image are mutually inverse",
                   image_set(enumeration(a)) == a && enumeration(image_set(inc)) == inc,
                   serialize(a) + " / " + serialize(inc));
  }
}

using SuiteFn = void (*)(SuiteRun&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> reg = {
      {"oracle-epsets", suite_oracle_epsets},
      {"oracle-qafuns", suite_oracle_qafuns},
      {"oracle-compress", suite_oracle_compress},
      {"slalom", suite_slalom},
      {"split1", suite_split1},
      {"rothsplit", suite_rothsplit},
      {"split4", suite_split4},
      {"maxfin", suite_maxfin},
      {"covers", suite_covers},
      {"selection", suite_selection},
      {"roundtrip", suite_roundtrip},
  };
  return reg;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

SuiteReport run_suite(const std::string& name, const GenParams& params) {
  auto it = registry().find(name);
  if (it == registry().end()) throw UnknownSuiteError(name);
  SuiteRun run(name, params);
  auto begin = std::chrono::steady_clock::now();
  it->second(run);
  SuiteReport report = run.finish();
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - begin)
          .count();
  return report;
}

}  // namespace omegalab
