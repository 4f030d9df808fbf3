#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "omegalab/epset.hpp"
#include "omegalab/gen.hpp"
#include "omegalab/qafun.hpp"

namespace omegalab {

/// One failing case: which case, which property, and the (shrunk)
/// counterexample in replayable textual form.
struct SuiteFailure {
  Nat case_index = 0;
  std::string property;
  std::string counterexample;
  bool operator==(const SuiteFailure&) const = default;
};

struct SuiteReport {
  std::string suite;
  Nat cases = 0;
  std::vector<SuiteFailure> failures;
  double wall_ms = 0;  // informational; excluded from serialized forms

  bool pass() const { return failures.empty(); }
  /// Deterministic in (seed, params, suite): no timing, byte-stable.
  std::string text() const;
  nlohmann::json json() const;
};

std::vector<std::string> suite_names();

/// Runs the named property suite with oracle cross-checks. Throws
/// UnknownSuiteError for unknown names.
SuiteReport run_suite(const std::string& name, const GenParams& params);

/// Inputs of one property case, in shrinkable form.
struct CaseData {
  std::vector<EPSet> sets;
  std::vector<QAFun> fns;
  std::vector<Nat> nums;
};

using CaseProperty = std::function<bool(const CaseData&)>;

/// Greedy minimization: repeatedly applies field reductions (drop prefix and
/// pattern elements, halve starts and values, divisor periods) while the
/// property keeps failing. Candidates that throw are discarded.
CaseData shrink_case(CaseData data, const CaseProperty& holds);

std::string describe_case(const CaseData& data);

}  // namespace omegalab
