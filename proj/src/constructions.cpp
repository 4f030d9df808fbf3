#include "omegalab/constructions.hpp"

#include <algorithm>
#include <limits>

#include "omegalab/textio.hpp"

namespace omegalab {

EPSet splitter_from_slalom(const QAFun& h) {
  if (!h.increasing()) throw NotIncreasingError("splitter_from_slalom");
  QAFun lo = restrict_progression(h, 0, 2);  // h(2n)
  QAFun hi = restrict_progression(h, 1, 2);  // h(2n+1)

  Nat index_period = lcm_checked(lo.period(), hi.period());
  Nat advance = lo.incr() * (index_period / lo.period());
  Nat n_tail = std::max(lo.start(), hi.start());
  Nat x0 = lo.eval(n_tail);

  // Largest n with lo(n) <= x; lo is increasing, so lo(x+1) > x.
  auto block_of = [&](Nat x) -> std::optional<Nat> {
    if (lo.eval(0) > x) return std::nullopt;
    Nat a = 0, b = x + 1;
    while (a < b) {
      Nat mid = a + (b - a + 1) / 2;
      if (lo.eval(mid) <= x) a = mid;
      else b = mid - 1;
    }
    return a;
  };
  auto pred = [&](Nat x) {
    auto n = block_of(x);
    return n.has_value() && x < hi.eval(*n);
  };
  return EPSet::from_eventual_predicate(pred, x0, advance);
}

std::vector<Nat> first2n(const EPSet& y, Nat n) {
  if (!y.infinite()) throw FiniteSetError("first2n: set is finite");
  if (n == 0) throw std::invalid_argument("first2n: n must be >= 1");
  std::vector<Nat> out;
  out.reserve(2 * n);
  for (Nat i = 0; i < 2 * n; ++i) out.push_back(y.nth(i));
  return out;
}

GuesserProgram::GuesserProgram(std::vector<EPSet> sources) : sources_(std::move(sources)) {
  if (sources_.empty()) throw std::invalid_argument("GuesserProgram: empty family");
  for (const EPSet& y : sources_)
    if (!y.infinite()) throw FiniteSetError("GuesserProgram: finite source");
}

std::vector<Nat> GuesserProgram::guess(Nat n) const {
  return first2n(sources_[n % sources_.size()], n);
}

GuesserProgram rothberger_guesser(std::vector<EPSet> family) {
  return GuesserProgram(std::move(family));
}

namespace detail {

GreedyPicker::GreedyPicker(std::vector<EPSet> sources, Nat per_round)
    : sources_(std::move(sources)),
      per_round_(per_round),
      avail_(sources_.size()),
      head_(sources_.size(), 0),
      entered_(sources_.size(), 0) {
  if (sources_.empty()) throw std::invalid_argument("GreedyPicker: empty family");
  for (const EPSet& y : sources_)
    if (!y.infinite()) throw FiniteSetError("GreedyPicker: finite source");
}

void GreedyPicker::skip_used(std::size_t strand) {
  auto& a = avail_[strand];
  auto& h = head_[strand];
  while (h < a.size() && used_.count(a[h])) ++h;
}

GreedyPicker::Round GreedyPicker::step() {
  ++round_;
  std::size_t s = round_ % sources_.size();
  Nat target = checked_mul(per_round_, round_);
  while (entered_[s] < target) avail_[s].push_back(sources_[s].nth(entered_[s]++));

  auto pop = [&]() -> Nat {
    skip_used(s);
    if (head_[s] >= avail_[s].size())
      throw ExhaustedChoiceError("greedy round " + std::to_string(round_) +
                                 " has no unused candidate");
    return avail_[s][head_[s]++];
  };
  Round r;
  r.pick_i = pop();
  r.pick_j = pop();
  used_.insert(r.pick_i);
  used_.insert(r.pick_j);
  return r;
}

Nat GreedyPicker::settled_below() {
  Nat bound = std::numeric_limits<Nat>::max();
  for (std::size_t s = 0; s < sources_.size(); ++s) {
    skip_used(s);
    Nat m = sources_[s].nth(entered_[s]);  // smallest not yet entered
    if (head_[s] < avail_[s].size()) m = std::min(m, avail_[s][head_[s]]);
    bound = std::min(bound, m);
  }
  return bound;
}

}  // namespace detail

namespace {

LazySet make_greedy_stream(std::vector<EPSet> sources, bool take_j) {
  std::string params;
  for (const EPSet& y : sources) {
    if (!params.empty()) params += ";";
    params += serialize(y);
  }
  auto factory = [sources, take_j]() -> LazySet::Generator {
    auto picker = std::make_shared<detail::GreedyPicker>(sources);
    auto pending = std::make_shared<std::set<Nat>>();
    return [picker, pending, take_j]() -> Nat {
      for (Nat rounds = 0; rounds <= (Nat{1} << 22); ++rounds) {
        if (!pending->empty() && *pending->begin() < picker->settled_below()) {
          Nat v = *pending->begin();
          pending->erase(pending->begin());
          return v;
        }
        auto r = picker->step();
        pending->insert(take_j ? r.pick_j : r.pick_i);
      }
      throw BudgetExceededError("greedy stream stalled");
    };
  };
  return LazySet(take_j ? "greedy_j" : "greedy_i", params, factory);
}

}  // namespace

std::pair<LazySet, LazySet> ij_from_guesser(const GuesserProgram& g) {
  return {make_greedy_stream(g.sources(), false), make_greedy_stream(g.sources(), true)};
}

QAFun gtilde(const QAFun& g, const QAFun& h) {
  if (!h.increasing()) throw NotIncreasingError("gtilde: compressor not increasing");
  return compose(g, shift(h, 1));
}

bool BoundingReport::verifies() const {
  return std::all_of(flags.begin(), flags.end(), [](bool f) { return f; });
}

bool BoundingReport::recheck() const {
  if (below_sets.size() != family.size() || compressed.size() != family.size() ||
      tilde_below_sets.size() != family.size() || flags.size() != family.size())
    return false;
  if (tilde != gtilde(bound, compressor)) return false;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (below_sets[i] != le_set(family[i], bound, false)) return false;
    if (compressed[i] != compress_set(below_sets[i], compressor)) return false;
    if (tilde_below_sets[i] != le_set(family[i], tilde, false)) return false;
    if (flags[i] != almost_subset(compressed[i], tilde_below_sets[i])) return false;
  }
  return true;
}

BoundingReport bounding_reduction(std::span<const QAFun> family, const QAFun& g,
                                  const QAFun& h) {
  if (!h.increasing()) throw NotIncreasingError("bounding_reduction: compressor not increasing");
  if (!g.nondecreasing())
    throw NotIncreasingError("bounding_reduction: bound witness must be nondecreasing");
  for (const QAFun& f : family)
    if (!f.nondecreasing())
      throw NotIncreasingError("bounding_reduction: family member not nondecreasing");

  BoundingReport r;
  r.family.assign(family.begin(), family.end());
  r.bound = g;
  r.compressor = h;
  r.tilde = gtilde(g, h);
  for (const QAFun& f : family) {
    EPSet below = le_set(f, g, false);
    if (!below.infinite())
      throw WitnessInvalidError(serialize(f), "bounding_reduction: [f <= g] is finite");
    EPSet comp = compress_set(below, h);
    EPSet tilde_below = le_set(f, r.tilde, false);
    r.below_sets.push_back(below);
    r.compressed.push_back(comp);
    r.tilde_below_sets.push_back(tilde_below);
    r.flags.push_back(almost_subset(comp, tilde_below));
    r.exact_flags.push_back(difference(comp, tilde_below).empty());
  }
  return r;
}

std::vector<QAFun> maxfin_closure(std::span<const QAFun> family) {
  if (family.empty()) throw std::invalid_argument("maxfin_closure: empty family");
  if (family.size() > 16) throw std::invalid_argument("maxfin_closure: family too large");
  std::vector<QAFun> out;
  std::size_t n = family.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<QAFun> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) subset.push_back(family[i]);
    QAFun m = pointwise_max(subset);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  return out;
}

QAFun escape_function(std::span<const QAFun> family) {
  return add_constant(pointwise_max(family), 1);
}

FamilySpec filter_subbase_from_bound(std::span<const QAFun> family, const QAFun& g) {
  for (const QAFun& m : maxfin_closure(family))
    if (!le_set(m, g, true).infinite())
      throw WitnessInvalidError(serialize(m),
                                "filter_subbase_from_bound: [m < g] is finite");
  std::vector<EPSet> gens;
  for (const QAFun& f : family) {
    EPSet s = le_set(f, g, true);
    if (std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  }
  return FamilySpec::of(std::move(gens), FamilySpec::Claim::FilterSubbase);
}

LazyFun recursive_slalom_stream(std::vector<QAFun> family) {
  if (family.empty()) throw std::invalid_argument("recursive_slalom_stream: empty family");
  for (const QAFun& f : family)
    if (!f.increasing())
      throw NotIncreasingError("recursive_slalom_stream: family member not increasing");
  QAFun b = pointwise_max(family);
  std::string params;
  for (const QAFun& f : family) {
    if (!params.empty()) params += ";";
    params += serialize(f);
  }
  // Values grow like slope^n; evaluate with checked arithmetic so a blown
  // horizon raises instead of wrapping.
  auto eval_checked = [](const QAFun& f, Nat n) -> Nat {
    if (n < f.start()) return f.table()[n];
    Nat i = n - f.start();
    Nat m = f.period();
    return checked_add(f.base()[i % m], checked_mul(f.incr(), i / m));
  };
  auto factory = [b, eval_checked]() -> LazyFun::Generator {
    return [b, eval_checked, cur = Nat{0}, started = false]() mutable -> Nat {
      if (!started) {
        started = true;
        return cur;  // h(0) = 0
      }
      cur = checked_add(eval_checked(b, cur), 1);
      return cur;
    };
  };
  return LazyFun("recursive_slalom", params, factory);
}

}  // namespace omegalab
