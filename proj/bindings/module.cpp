#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "omegalab/compression.hpp"
#include "omegalab/constructions.hpp"
#include "omegalab/covers.hpp"
#include "omegalab/families.hpp"
#include "omegalab/gen.hpp"
#include "omegalab/lazy.hpp"
#include "omegalab/suites.hpp"
#include "omegalab/textio.hpp"

namespace py = pybind11;
using namespace omegalab;

PYBIND11_MODULE(_omegalab, m) {
  m.doc() = "Exact combinatorics of eventually periodic sets and functions";

  py::register_exception<FiniteSetError>(m, "FiniteSetError");
  py::register_exception<NotIncreasingError>(m, "NotIncreasingError");
  py::register_exception<FiniteIntersectionError>(m, "FiniteIntersectionError");
  py::register_exception<WitnessInvalidError>(m, "WitnessInvalidError");
  py::register_exception<BudgetExceededError>(m, "BudgetExceededError");
  py::register_exception<EmptyTraceError>(m, "EmptyTraceError");
  py::register_exception<ExhaustedChoiceError>(m, "ExhaustedChoiceError");
  py::register_exception<UnknownSuiteError>(m, "UnknownSuiteError");
  py::register_exception<ParseError>(m, "ParseError");

  py::class_<EPSet>(m, "EPSet")
      .def(py::init([](std::vector<Nat> prefix, Nat start, Nat period,
                       std::vector<Nat> pattern) {
             return EPSet::from_parts(std::move(prefix), start, period, std::move(pattern));
           }),
           py::arg("prefix"), py::arg("start"), py::arg("period"), py::arg("pattern"))
      .def_static("naturals", &EPSet::naturals)
      .def_static("finite", &EPSet::finite)
      .def_static("residues", &EPSet::residues)
      .def("member", &EPSet::member)
      .def("infinite", &EPSet::infinite)
      .def("empty", &EPSet::empty)
      .def("cofinite", &EPSet::cofinite)
      .def_property_readonly("prefix", &EPSet::prefix)
      .def_property_readonly("start", &EPSet::start)
      .def_property_readonly("period", &EPSet::period)
      .def_property_readonly("pattern", &EPSet::pattern)
      .def("tail_gap_bound", &EPSet::tail_gap_bound)
      .def("nth", &EPSet::nth)
      .def("count_below", &EPSet::count_below)
      .def("elements_below", &EPSet::elements_below)
      .def("__eq__", [](const EPSet& a, const EPSet& b) { return a == b; })
      .def("__hash__", [](const EPSet& a) { return py::hash(py::str(serialize(a))); })
      .def("__contains__", [](const EPSet& a, Nat n) { return a.member(n); })
      .def("__repr__", [](const EPSet& a) { return serialize(a); });

  m.def("intersect", &intersect);
  m.def("union", &unite);
  m.def("complement", &complement);
  m.def("difference", &difference);
  m.def("almost_subset", &almost_subset);
  m.def("is_cofinite", &is_cofinite);
  m.def("canonicalize", [](const EPSet& a) { return canonicalize(a); });

  py::class_<QAFun>(m, "QAFun")
      .def(py::init([](std::vector<Nat> table, Nat incr, std::vector<Nat> base) {
             return QAFun::from_parts(std::move(table), incr, std::move(base));
           }),
           py::arg("table"), py::arg("incr"), py::arg("base"))
      .def_static("constant", &QAFun::constant)
      .def_static("linear", &QAFun::linear, py::arg("slope"), py::arg("offset") = 0)
      .def_static("identity", &QAFun::identity)
      .def("eval", &QAFun::eval)
      .def("__call__", &QAFun::eval)
      .def_property_readonly("table", &QAFun::table)
      .def_property_readonly("period", &QAFun::period)
      .def_property_readonly("incr", &QAFun::incr)
      .def_property_readonly("base", &QAFun::base)
      .def("increasing", &QAFun::increasing)
      .def("nondecreasing", &QAFun::nondecreasing)
      .def("__eq__", [](const QAFun& a, const QAFun& b) { return a == b; })
      .def("__repr__", [](const QAFun& f) { return serialize(f); });

  m.def("compose", &compose);
  m.def("pointwise_max",
        [](std::vector<QAFun> fs) { return pointwise_max(fs); });
  m.def("shift", &shift);
  m.def("add_constant", &add_constant);
  m.def("restrict_progression", &restrict_progression);
  m.def("le_star", &le_star);
  m.def("le_set", &le_set, py::arg("f"), py::arg("g"), py::arg("strict") = false);
  m.def("equal_set", &equal_set);
  m.def("member_set", &member_set);
  m.def("image_set", &image_set);
  m.def("enumeration", &enumeration);

  py::class_<StrandFun>(m, "StrandFun")
      .def(py::init<std::vector<QAFun>>())
      .def("eval", &StrandFun::eval)
      .def("__call__", &StrandFun::eval)
      .def("strand_count", &StrandFun::strand_count)
      .def("__repr__", [](const StrandFun& g) { return serialize(g); });
  m.def("eq_infinitely_often", &eq_infinitely_often);

  py::class_<LazySet>(m, "LazySet")
      .def("truncate", &LazySet::truncate)
      .def_property_readonly("name", &LazySet::name)
      .def_property_readonly("params", &LazySet::params)
      .def("with_budget", &LazySet::with_budget);
  py::class_<LazyFun>(m, "LazyFun")
      .def("values", &LazyFun::values)
      .def_property_readonly("name", &LazyFun::name);
  m.def("baire_to_roth", &baire_to_roth);
  m.def("truncate", [](const LazySet& s, Nat depth) { return s.truncate(depth); });

  m.def("compress_set", &compress_set);
  m.def("compress_family",
        [](std::vector<EPSet> fam, const QAFun& h) { return compress_family(fam, h); });
  m.def("is_slalom", [](const QAFun& h, std::vector<EPSet> fam) { return is_slalom(h, fam); });
  m.def("build_slalom", [](std::vector<EPSet> fam) { return build_slalom(fam); });
  m.def("frechet_after",
        [](std::vector<EPSet> fam, const QAFun& h) { return frechet_after(fam, h); });

  py::class_<TrichotomyVerdict> verdict(m, "TrichotomyVerdict");
  py::enum_<TrichotomyVerdict::Tag>(verdict, "Tag")
      .value("Frechet", TrichotomyVerdict::Tag::Frechet)
      .value("UltraLike", TrichotomyVerdict::Tag::UltraLike)
      .value("FullLike", TrichotomyVerdict::Tag::FullLike)
      .value("Unclassified", TrichotomyVerdict::Tag::Unclassified);
  verdict.def_readonly("tag", &TrichotomyVerdict::tag)
      .def_readonly("h", &TrichotomyVerdict::h)
      .def_readonly("compressed", &TrichotomyVerdict::compressed)
      .def("reverify", [](const TrichotomyVerdict& v, std::vector<EPSet> fam,
                          std::vector<EPSet> tests) { return v.reverify(fam, tests); });
  m.def("classify_trichotomy",
        [](std::vector<EPSet> fam, const QAFun& h, std::vector<EPSet> tests) {
          return classify_trichotomy(fam, h, tests);
        });

  py::class_<FamilySpec> family(m, "FamilySpec");
  py::enum_<FamilySpec::Claim>(family, "Claim")
      .value("NoClaim", FamilySpec::Claim::None)
      .value("SemifilterBase", FamilySpec::Claim::SemifilterBase)
      .value("FilterBase", FamilySpec::Claim::FilterBase)
      .value("FilterSubbase", FamilySpec::Claim::FilterSubbase);
  family
      .def(py::init([](std::vector<EPSet> gens) { return FamilySpec::of(std::move(gens)); }))
      .def_readonly("generators", &FamilySpec::generators)
      .def_readonly("claim", &FamilySpec::claim)
      .def("__repr__", [](const FamilySpec& f) { return serialize(f); });
  py::class_<TestBattery>(m, "TestBattery")
      .def(py::init([](std::vector<EPSet> tests) { return TestBattery::of(std::move(tests)); }))
      .def_readonly("tests", &TestBattery::tests);

  m.def("gen_membership", &gen_membership);
  m.def("psi_k", &psi_k);
  m.def("subbase_check", &subbase_check);
  m.def("is_filter_base", &is_filter_base);
  m.def("dual_membership", &dual_membership);
  m.def("split_witness_check",
        [](std::vector<EPSet> members, const EPSet& c) {
          return split_witness_check(members, c);
        });
  m.def("reaping_relative",
        [](std::vector<EPSet> members, const TestBattery& b) {
          return reaping_relative(members, b);
        });
  m.def("ultra_relative", &ultra_relative);
  m.def("base_for_roth_relative", &base_for_roth_relative);

  m.def("splitter_from_slalom", &splitter_from_slalom);
  m.def("first2n", &first2n);
  py::class_<GuesserProgram>(m, "GuesserProgram")
      .def(py::init<std::vector<EPSet>>())
      .def("strand_count", &GuesserProgram::strand_count)
      .def("guess", &GuesserProgram::guess);
  m.def("rothberger_guesser",
        [](std::vector<EPSet> fam) { return rothberger_guesser(std::move(fam)); });
  m.def("ij_from_guesser", &ij_from_guesser);
  m.def("gtilde", &gtilde);

  py::class_<BoundingReport>(m, "BoundingReport")
      .def_readonly("family", &BoundingReport::family)
      .def_readonly("bound", &BoundingReport::bound)
      .def_readonly("compressor", &BoundingReport::compressor)
      .def_readonly("tilde", &BoundingReport::tilde)
      .def_readonly("below_sets", &BoundingReport::below_sets)
      .def_readonly("compressed", &BoundingReport::compressed)
      .def_readonly("tilde_below_sets", &BoundingReport::tilde_below_sets)
      .def("verifies", &BoundingReport::verifies)
      .def("recheck", &BoundingReport::recheck);
  m.def("bounding_reduction",
        [](std::vector<QAFun> fam, const QAFun& g, const QAFun& h) {
          return bounding_reduction(fam, g, h);
        });
  m.def("maxfin_closure",
        [](std::vector<QAFun> fam) { return maxfin_closure(fam); });
  m.def("escape_function",
        [](std::vector<QAFun> fam) { return escape_function(fam); });
  m.def("filter_subbase_from_bound",
        [](std::vector<QAFun> fam, const QAFun& g) {
          return filter_subbase_from_bound(fam, g);
        });
  m.def("recursive_slalom_stream",
        [](std::vector<QAFun> fam) { return recursive_slalom_stream(std::move(fam)); });

  py::class_<CoverTrace>(m, "CoverTrace")
      .def(py::init([](std::vector<std::pair<std::string, EPSet>> entries) {
        return CoverTrace::of(std::move(entries));
      }))
      .def_property_readonly("points", &CoverTrace::points)
      .def_property_readonly("traces", &CoverTrace::traces)
      .def("trace", [](const CoverTrace& c, const std::string& label) { return c.trace(label); })
      .def("__repr__", [](const CoverTrace& c) { return serialize(c); });
  py::class_<CoverTags>(m, "CoverTags")
      .def_readonly("large", &CoverTags::large)
      .def_readonly("gamma", &CoverTags::gamma)
      .def_readonly("omega_rel", &CoverTags::omega_rel);
  m.def("classify_cover", &classify_cover);
  m.def("glue_cover", &glue_cover);
  m.def("split_cover", &split_cover);

  py::class_<GluePartition> part(m, "GluePartition");
  py::enum_<GluePartition::Mode>(part, "Mode")
      .value("Case1", GluePartition::Mode::Case1)
      .value("Case2", GluePartition::Mode::Case2);
  part.def_readonly("mode", &GluePartition::mode)
      .def_readonly("h", &GluePartition::h)
      .def_readonly("selector", &GluePartition::selector)
      .def("reverify", &GluePartition::reverify);
  m.def("gamma_glueable",
        [](const CoverTrace& c) { return gamma_glueable(c); });
  m.def("gamma_glueable_forced",
        [](const CoverTrace& c, const QAFun& h) { return gamma_glueable(c, h); });

  py::class_<CoverSequence>(m, "CoverSequence")
      .def(py::init([](std::vector<CoverTrace> covers) {
        return CoverSequence::of(std::move(covers));
      }))
      .def("length", &CoverSequence::length)
      .def_property_readonly("covers", &CoverSequence::covers);
  py::enum_<SelectionMode>(m, "SelectionMode")
      .value("S1", SelectionMode::S1)
      .value("Sfin", SelectionMode::Sfin)
      .value("Ufin", SelectionMode::Ufin);
  py::class_<PickSchedule>(m, "PickSchedule")
      .def_static("picks", &PickSchedule::picks)
      .def_static("windows", &PickSchedule::windows);
  py::class_<SelectionVerdict>(m, "SelectionVerdict")
      .def_readonly("points", &SelectionVerdict::points)
      .def_readonly("hit_sets", &SelectionVerdict::hit_sets)
      .def_readonly("tags", &SelectionVerdict::tags);
  m.def("evaluate_selection", &evaluate_selection);

  py::class_<GenParams>(m, "GenParams")
      .def(py::init<>())
      .def_readwrite("seed", &GenParams::seed)
      .def_readwrite("cases", &GenParams::cases)
      .def_readwrite("max_start", &GenParams::max_start)
      .def_readwrite("max_period", &GenParams::max_period)
      .def_readwrite("max_prefix", &GenParams::max_prefix)
      .def_readwrite("pattern_density_permille", &GenParams::pattern_density_permille)
      .def_readwrite("max_table", &GenParams::max_table)
      .def_readwrite("max_value", &GenParams::max_value)
      .def_readwrite("min_slope", &GenParams::min_slope)
      .def_readwrite("max_slope", &GenParams::max_slope)
      .def_readwrite("max_family", &GenParams::max_family)
      .def_readwrite("battery_size", &GenParams::battery_size);
  m.def("gen_epset", &gen_epset);
  m.def("gen_qafun", &gen_qafun);
  m.def("gen_increasing_qafun", &gen_increasing_qafun);
  m.def("gen_family", &gen_family);
  m.def("gen_cover", &gen_cover);

  py::class_<SuiteFailure>(m, "SuiteFailure")
      .def_readonly("case_index", &SuiteFailure::case_index)
      .def_readonly("property", &SuiteFailure::property)
      .def_readonly("counterexample", &SuiteFailure::counterexample);
  py::class_<SuiteReport>(m, "SuiteReport")
      .def_readonly("suite", &SuiteReport::suite)
      .def_readonly("cases", &SuiteReport::cases)
      .def_readonly("failures", &SuiteReport::failures)
      .def_readonly("wall_ms", &SuiteReport::wall_ms)
      .def("passed", &SuiteReport::pass)
      .def("text", &SuiteReport::text)
      .def("json", [](const SuiteReport& r) { return r.json().dump(); });
  m.def("suite_names", &suite_names);
  m.def("run_suite", &run_suite);

  m.def("serialize", [](const EPSet& a) { return serialize(a); });
  m.def("serialize", [](const QAFun& f) { return serialize(f); });
  m.def("serialize", [](const StrandFun& g) { return serialize(g); });
  m.def("serialize", [](const CoverTrace& c) { return serialize(c); });
  m.def("parse_epset", [](const std::string& s) { return parse_epset(s); });
  m.def("parse_qafun", [](const std::string& s) { return parse_qafun(s); });
  m.def("parse_strandfun", [](const std::string& s) { return parse_strandfun(s); });
  m.def("parse_family_document",
        [](const std::string& s) { return parse_family_document(s); });
  m.def("parse_cover_document",
        [](const std::string& s) { return parse_cover_document(s); });

  py::class_<FamilyDocument>(m, "FamilyDocument")
      .def_readonly("family", &FamilyDocument::family)
      .def_readonly("battery", &FamilyDocument::battery);
}
