#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace omegalab {

// Base for all domain errors so callers can catch the whole family at once.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An operation that needs an infinite set was fed a finite one.
struct FiniteSetError : Error {
  explicit FiniteSetError(const std::string& what = "set is finite") : Error(what) {}
};

// A compressor/enumerator argument must be strictly increasing (or a bound
// witness must be monotone) and is not.
struct NotIncreasingError : Error {
  explicit NotIncreasingError(const std::string& what = "function is not increasing")
      : Error(what) {}
};

// Some k-fold intersection of generators came out finite; `tuple` holds the
// generator indices of the offending intersection.
struct FiniteIntersectionError : Error {
  std::vector<std::size_t> tuple;
  explicit FiniteIntersectionError(std::vector<std::size_t> t,
                                   const std::string& what = "finite intersection")
      : Error(what), tuple(std::move(t)) {}
};

// A claimed witness fails its defining inequality; `witness` names the
// violating object.
struct WitnessInvalidError : Error {
  std::string witness;
  explicit WitnessInvalidError(std::string w, const std::string& what = "witness invalid")
      : Error(what + ": " + w), witness(std::move(w)) {}
};

struct BudgetExceededError : Error {
  explicit BudgetExceededError(const std::string& what = "stream step budget exceeded")
      : Error(what) {}
};

struct EmptyTraceError : Error {
  explicit EmptyTraceError(const std::string& what = "cover has an empty trace")
      : Error(what) {}
};

// A guesser round offered fewer than two unused candidates.
struct ExhaustedChoiceError : Error {
  explicit ExhaustedChoiceError(const std::string& what = "guesser round exhausted")
      : Error(what) {}
};

struct UnknownSuiteError : Error {
  explicit UnknownSuiteError(const std::string& name) : Error("unknown suite: " + name) {}
};

struct ParseError : Error {
  std::size_t line;
  std::size_t column;
  ParseError(std::size_t ln, std::size_t col, const std::string& what)
      : Error("parse error at " + std::to_string(ln) + ":" + std::to_string(col) + ": " + what),
        line(ln),
        column(col) {}
};

}  // namespace omegalab
