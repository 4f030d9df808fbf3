// Acceptance gate: one line per criterion, exact checks, pinned budgets.
// Exit code 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "omegalab/compression.hpp"
#include "omegalab/constructions.hpp"
#include "omegalab/covers.hpp"
#include "omegalab/families.hpp"
#include "omegalab/gen.hpp"
#include "omegalab/suites.hpp"
#include "omegalab/textio.hpp"

using namespace omegalab;

namespace {

int failures = 0;
int criterion_no = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const std::string& name, bool ok, double secs, double budget) {
  ++criterion_no;
  bool in_budget = secs < budget;
  if (!ok || !in_budget) ++failures;
  std::printf("[%2d/10] %-58s %s (%.2f s, budget %.0f s)\n", criterion_no, name.c_str(),
              ok ? (in_budget ? "PASS" : "FAIL (over budget)") : "FAIL", secs, budget);
}

GenParams base_params(Nat cases) {
  GenParams p;
  p.seed = 20260808;
  p.cases = cases;
  return p;
}

bool suite_passes(const std::string& name, const GenParams& p) {
  SuiteReport r = run_suite(name, p);
  if (!r.pass()) std::printf("        %s\n", r.text().c_str());
  return r.pass() && r.cases >= p.cases;
}

}  // namespace

int main() {
  // 1. Oracle agreement: set algebra, almost-inclusion, compression,
  //    composition, pointwise max and comparison sets against brute force.
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = suite_passes("oracle-epsets", base_params(1000)) &&
              suite_passes("oracle-qafuns", base_params(1000)) &&
              suite_passes("oracle-compress", base_params(1000));
    report("oracle agreement, 1000 cases per operation group", ok, seconds_since(t0), 10);
  }

  // 2. Slalom equivalence.
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = suite_passes("slalom", base_params(1000));
    report("built slaloms compress every family to cofinite", ok, seconds_since(t0), 5);
  }

  // 3. Splitter replay.
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = suite_passes("split1", base_params(1000));
    report("slalom splitters split their families", ok, seconds_since(t0), 5);
  }

  // 4. Greedy stream replay at depths 500/1000/2000.
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = suite_passes("rothsplit", base_params(300));
    report("greedy streams disjoint, counts grow at 500/1000/2000", ok, seconds_since(t0),
           20);
  }

  // 5. Bound transfer replay, plus explicit rejection of invalid witnesses.
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = suite_passes("split4", base_params(1000));
    GenParams p = base_params(100);
    int rejected = 0;
    for (Nat i = 0; i < 100; ++i) {
      QAFun g = gen_monotone_qafun(p, i);
      QAFun above = add_constant(g, 1);
      try {
        bounding_reduction(std::vector<QAFun>{above}, g, gen_increasing_qafun(p, i));
      } catch (const WitnessInvalidError&) {
        ++rejected;
      }
    }
    ok = ok && rejected == 100;
    report("bound transfer verifies; 100 invalid witnesses rejected", ok,
           seconds_since(t0), 5);
  }

  // 6. Escape functions, maxfin closure laws, filter subbases.
  {
    auto t0 = std::chrono::steady_clock::now();
    GenParams p = base_params(500);
    p.max_family = 4;
    bool ok = suite_passes("maxfin", p);
    report("escape beats maxfin closures; subbases check out", ok, seconds_since(t0), 5);
  }

  // 7. Trace/glue identity and partitions.
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = suite_passes("covers", base_params(500));
    report("glue equals compression; partitions reverify", ok, seconds_since(t0), 5);
  }

  // 8. Selection runner: random games match round-by-round play, built
  //    slaloms force gamma, and the three worked verdicts reproduce.
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = suite_passes("selection", base_params(300));

    CoverSequence trivial =
        CoverSequence::of({CoverTrace::of({{"x", EPSet::naturals()}})});
    SelectionVerdict v1 = evaluate_selection(trivial, PickSchedule::picks(QAFun::identity()),
                                             SelectionMode::S1);
    ok = ok && v1.hit_sets[0] == EPSet::naturals() && v1.tags.gamma;

    CoverSequence parity = CoverSequence::of({CoverTrace::of(
        {{"x", EPSet::residues(2, {0})}, {"y", EPSet::residues(2, {1})}})});
    SelectionVerdict v2 = evaluate_selection(
        parity, PickSchedule::windows(QAFun::linear(2, 0)), SelectionMode::Ufin);
    ok = ok && v2.hit_sets[0] == EPSet::naturals() && v2.hit_sets[1] == EPSet::naturals() &&
         v2.tags.gamma;

    CoverSequence sparse =
        CoverSequence::of({CoverTrace::of({{"x", EPSet::residues(4, {0})}})});
    SelectionVerdict v3 = evaluate_selection(sparse, PickSchedule::picks(QAFun::linear(2, 0)),
                                             SelectionMode::S1);
    ok = ok && v3.hit_sets[0] == EPSet::residues(2, {0}) && v3.tags.large && !v3.tags.gamma;

    report("selection games exact; worked verdicts reproduce", ok, seconds_since(t0), 5);
  }

  // 9. Round trips across every public type.
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = suite_passes("roundtrip", base_params(1000));
    report("serialize/parse and enumeration/image round trips", ok, seconds_since(t0), 5);
  }

  // 10. Determinism: identical seeds give byte-identical reports.
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    GenParams p = base_params(40);
    for (const std::string& name : suite_names()) {
      SuiteReport a = run_suite(name, p);
      SuiteReport b = run_suite(name, p);
      if (a.text() != b.text() || a.json().dump() != b.json().dump()) ok = false;
    }
    report("same seed, byte-identical suite reports", ok, seconds_since(t0), 30);
  }

  if (failures == 0) {
    std::printf("acceptance: all 10 criteria PASS\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
