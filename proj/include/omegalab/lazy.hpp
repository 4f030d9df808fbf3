#pragma once

#include <functional>
#include <string>
#include <vector>

#include "omegalab/errors.hpp"
#include "omegalab/numeric.hpp"
#include "omegalab/qafun.hpp"

namespace omegalab {

/// A stream-presented strictly increasing set of naturals with
/// truncation-only semantics, for constructions that leave the eventually
/// periodic universe. Each truncation replays a fresh generator, so results
/// are reproducible; a single generator instance is single-consumer.
class LazySet {
 public:
  /// next() yields the elements in strictly increasing order, forever.
  using Generator = std::function<Nat()>;
  using Factory = std::function<Generator()>;

  LazySet(std::string name, std::string params, Factory factory,
          Nat budget = kDefaultBudget)
      : name_(std::move(name)),
        params_(std::move(params)),
        factory_(std::move(factory)),
        budget_(budget) {}

  /// Elements < depth, in increasing order. Throws BudgetExceededError if the
  /// generator needs more than `budget` emissions to clear [0, depth).
  std::vector<Nat> truncate(Nat depth) const;

  const std::string& name() const { return name_; }
  const std::string& params() const { return params_; }
  Nat budget() const { return budget_; }
  LazySet with_budget(Nat budget) const { return {name_, params_, factory_, budget}; }

  static constexpr Nat kDefaultBudget = Nat{1} << 20;

 private:
  std::string name_;
  std::string params_;
  Factory factory_;
  Nat budget_;
};

/// A stream-presented function N -> N (values in index order), same
/// replay-based reproducibility as LazySet.
class LazyFun {
 public:
  using Generator = std::function<Nat()>;  // yields h(0), h(1), ...
  using Factory = std::function<Generator()>;

  LazyFun(std::string name, std::string params, Factory factory)
      : name_(std::move(name)), params_(std::move(params)), factory_(std::move(factory)) {}

  std::vector<Nat> values(Nat count) const;

  const std::string& name() const { return name_; }
  const std::string& params() const { return params_; }

 private:
  std::string name_;
  std::string params_;
  Factory factory_;
};

/// The point-to-set bridge a_f = {f(0)+...+f(n)+n : n in N} as a stream;
/// strictly increasing for every f.
LazySet baire_to_roth(const QAFun& f);

std::vector<Nat> truncate(const LazySet& a, Nat depth);

}  // namespace omegalab
