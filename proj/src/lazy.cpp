#include "omegalab/lazy.hpp"

#include "omegalab/textio.hpp"

namespace omegalab {

std::vector<Nat> LazySet::truncate(Nat depth) const {
  Generator gen = factory_();
  std::vector<Nat> out;
  Nat steps = 0;
  for (;;) {
    if (++steps > budget_)
      throw BudgetExceededError("truncate: budget exhausted before depth " +
                                std::to_string(depth));
    Nat v = gen();
    if (v >= depth) break;
    out.push_back(v);
  }
  return out;
}

std::vector<Nat> LazyFun::values(Nat count) const {
  Generator gen = factory_();
  std::vector<Nat> out;
  out.reserve(count);
  for (Nat i = 0; i < count; ++i) out.push_back(gen());
  return out;
}

LazySet baire_to_roth(const QAFun& f) {
  auto factory = [f]() -> LazySet::Generator {
    // term(n) = f(0) + ... + f(n) + n, emitted for n = 0, 1, ...
    return [f, n = Nat{0}, acc = Nat{0}]() mutable {
      acc = n == 0 ? f.eval(0) : checked_add(acc, checked_add(f.eval(n), 1));
      ++n;
      return acc;
    };
  };
  return LazySet("baire_to_roth", serialize(f), factory);
}

std::vector<Nat> truncate(const LazySet& a, Nat depth) { return a.truncate(depth); }

}  // namespace omegalab
