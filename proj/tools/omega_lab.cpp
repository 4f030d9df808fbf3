// omega-lab: command-line front end for the eventually periodic
// combinatorics laboratory. Exit codes: 0 success / properties hold,
// 1 a checked property failed, 2 usage or input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "omegalab/compression.hpp"
#include "omegalab/constructions.hpp"
#include "omegalab/covers.hpp"
#include "omegalab/families.hpp"
#include "omegalab/gen.hpp"
#include "omegalab/suites.hpp"
#include "omegalab/textio.hpp"

using namespace omegalab;
using nlohmann::json;

namespace {

struct Output {
  std::string format = "text";
  std::string out_path;
  std::ostringstream text;
  json data = json::object();

  void line(const std::string& s) { text << s << "\n"; }

  int flush(int code) {
    std::string payload = format == "json" ? data.dump(2) + "\n" : text.str();
    if (out_path.empty()) {
      std::cout << payload;
    } else {
      std::ofstream f(out_path);
      if (!f) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
      }
      f << payload;
    }
    return code;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Nat env_seed() {
  if (const char* s = std::getenv("OMEGA_LAB_SEED")) return std::strtoull(s, nullptr, 10);
  return 1;
}

json tags_json(const CoverTags& t) {
  return {{"large", t.large}, {"gamma", t.gamma}, {"omega_rel", t.omega_rel}};
}

std::string tags_text(const CoverTags& t) {
  std::string s;
  if (t.gamma) s += "gamma ";
  if (t.omega_rel) s += "omega_rel ";
  if (t.large) s += "large ";
  if (s.empty()) return "fails";
  s.pop_back();
  return s;
}

json verdict_json(const TrichotomyVerdict& v) {
  json comp = json::array();
  for (const EPSet& c : v.compressed) comp.push_back(serialize(c));
  json table = json::array();
  for (const auto& d : v.table)
    table.push_back({{"test", d.test},
                     {"generator", d.generator},
                     {"complement_side", d.complement_side}});
  return {{"tag", to_string(v.tag)},
          {"h", serialize(v.h)},
          {"compressed", comp},
          {"table", table}};
}

int cmd_eval(Output& out, const std::string& fn_text, const std::string& set_text,
             const std::vector<Nat>& at) {
  json results = json::array();
  if (!fn_text.empty()) {
    QAFun f = parse_qafun(fn_text);
    for (Nat n : at) {
      out.line(fn_text + " @ " + std::to_string(n) + " = " + std::to_string(f.eval(n)));
      results.push_back({{"n", n}, {"value", f.eval(n)}});
    }
  }
  if (!set_text.empty()) {
    EPSet a = parse_epset(set_text);
    for (Nat n : at) {
      bool m = a.member(n);
      out.line(set_text + " contains " + std::to_string(n) + ": " + (m ? "yes" : "no"));
      results.push_back({{"n", n}, {"member", m}});
    }
  }
  out.data["results"] = results;
  return 0;
}

int cmd_compress(Output& out, const std::string& family_path, const std::string& h_text) {
  FamilyDocument doc = parse_family_document(slurp(family_path));
  QAFun h = parse_qafun(h_text);
  auto compressed = compress_family(doc.family.generators, h);
  out.line("h: " + serialize(h));
  for (const EPSet& c : compressed) out.line("compressed: " + serialize(c));
  bool frechet = frechet_after(doc.family.generators, h);
  out.line(std::string("frechet_after: ") + (frechet ? "true" : "false"));
  json jcomp = json::array();
  for (const EPSet& c : compressed) jcomp.push_back(serialize(c));
  out.data["h"] = serialize(h);
  out.data["compressed"] = jcomp;
  out.data["frechet_after"] = frechet;
  if (doc.battery) {
    TrichotomyVerdict v = classify_trichotomy(doc.family.generators, h, doc.battery->tests);
    out.line(std::string("verdict: ") + to_string(v.tag));
    out.line(std::string("reverifies: ") +
             (v.reverify(doc.family.generators, doc.battery->tests) ? "true" : "false"));
    out.data["verdict"] = verdict_json(v);
  }
  return 0;
}

int cmd_classify(Output& out, const std::string& family_path) {
  FamilyDocument doc = parse_family_document(slurp(family_path));
  const FamilySpec& fam = doc.family;
  bool subbase = subbase_check(fam);
  bool base = is_filter_base(fam);
  out.line("generators: " + std::to_string(fam.generators.size()));
  out.line(std::string("claim: ") + to_string(fam.claim));
  out.line(std::string("subbase_check: ") + (subbase ? "true" : "false"));
  out.line(std::string("is_filter_base: ") + (base ? "true" : "false"));
  out.data["generators"] = fam.generators.size();
  out.data["claim"] = to_string(fam.claim);
  out.data["subbase_check"] = subbase;
  out.data["is_filter_base"] = base;
  if (doc.battery) {
    bool reaping = reaping_relative(fam.generators, *doc.battery);
    bool ultra = ultra_relative(fam, *doc.battery);
    bool roth = base_for_roth_relative(fam, *doc.battery);
    out.line(std::string("reaping_relative: ") + (reaping ? "true" : "false"));
    out.line(std::string("ultra_relative: ") + (ultra ? "true" : "false"));
    out.line(std::string("base_for_roth_relative: ") + (roth ? "true" : "false"));
    out.data["reaping_relative"] = reaping;
    out.data["ultra_relative"] = ultra;
    out.data["base_for_roth_relative"] = roth;
  }
  return 0;
}

int cmd_witness_split1(Output& out, const std::string& family_path) {
  FamilyDocument doc = parse_family_document(slurp(family_path));
  QAFun h = build_slalom(doc.family.generators);
  EPSet a = splitter_from_slalom(h);
  bool ok = split_witness_check(doc.family.generators, a);
  out.line("slalom: " + serialize(h));
  out.line("splitter: " + serialize(a));
  out.line(std::string("splits: ") + (ok ? "true" : "false"));
  out.data = {{"slalom", serialize(h)}, {"splitter", serialize(a)}, {"splits", ok}};
  return ok ? 0 : 1;
}

int cmd_witness_rothsplit(Output& out, const std::string& family_path, Nat depth) {
  FamilyDocument doc = parse_family_document(slurp(family_path));
  GuesserProgram g = rothberger_guesser(doc.family.generators);
  auto [I, J] = ij_from_guesser(g);
  LazyTruncation ti = take_truncation(I, depth);
  LazyTruncation tj = take_truncation(J, depth);
  out.line(serialize(ti));
  out.line(serialize(tj));
  bool ok = true;
  std::set<Nat> iset(ti.elements.begin(), ti.elements.end());
  for (Nat v : tj.elements)
    if (iset.count(v)) ok = false;
  json counts = json::array();
  for (std::size_t s = 0; s < doc.family.generators.size(); ++s) {
    const EPSet& y = doc.family.generators[s];
    Nat ci = 0, cj = 0;
    for (Nat v : ti.elements) ci += y.member(v);
    for (Nat v : tj.elements) cj += y.member(v);
    out.line("source " + std::to_string(s) + ": |I&y|=" + std::to_string(ci) +
             " |J&y|=" + std::to_string(cj));
    counts.push_back({{"source", s}, {"i_hits", ci}, {"j_hits", cj}});
    if (ci == 0 || cj == 0) ok = false;
  }
  out.line(std::string("disjoint_and_splitting: ") + (ok ? "true" : "false"));
  out.data = {{"i", serialize(ti)},
              {"j", serialize(tj)},
              {"counts", counts},
              {"disjoint_and_splitting", ok}};
  return ok ? 0 : 1;
}

int cmd_witness_split4(Output& out, const std::vector<std::string>& fns,
                       const std::string& g_text, const std::string& h_text) {
  std::vector<QAFun> family;
  for (const std::string& s : fns) family.push_back(parse_qafun(s));
  QAFun g = parse_qafun(g_text);
  QAFun h = parse_qafun(h_text);
  BoundingReport r = bounding_reduction(family, g, h);
  out.line("gtilde: " + serialize(r.tilde));
  json members = json::array();
  for (std::size_t i = 0; i < family.size(); ++i) {
    out.line("f: " + serialize(family[i]));
    out.line("  [f<=g]:      " + serialize(r.below_sets[i]));
    out.line("  compressed:  " + serialize(r.compressed[i]));
    out.line("  [f<=gtilde]: " + serialize(r.tilde_below_sets[i]));
    out.line(std::string("  contained: ") + (r.flags[i] ? "true" : "false"));
    members.push_back({{"f", serialize(family[i])},
                       {"below", serialize(r.below_sets[i])},
                       {"compressed", serialize(r.compressed[i])},
                       {"tilde_below", serialize(r.tilde_below_sets[i])},
                       {"contained", static_cast<bool>(r.flags[i])}});
  }
  bool ok = r.verifies();
  out.line(std::string("verifies: ") + (ok ? "true" : "false"));
  out.data = {{"gtilde", serialize(r.tilde)}, {"members", members}, {"verifies", ok}};
  return ok ? 0 : 1;
}

int cmd_witness_subbase(Output& out, const std::vector<std::string>& fns,
                        const std::string& g_text) {
  std::vector<QAFun> family;
  for (const std::string& s : fns) family.push_back(parse_qafun(s));
  FamilySpec sub = filter_subbase_from_bound(family, parse_qafun(g_text));
  for (const EPSet& a : sub.generators) out.line("generator: " + serialize(a));
  bool ok = subbase_check(sub);
  out.line(std::string("subbase_check: ") + (ok ? "true" : "false"));
  json gens = json::array();
  for (const EPSet& a : sub.generators) gens.push_back(serialize(a));
  out.data = {{"generators", gens}, {"subbase_check", ok}};
  return ok ? 0 : 1;
}

int cmd_witness_escape(Output& out, const std::vector<std::string>& fns) {
  std::vector<QAFun> family;
  for (const std::string& s : fns) family.push_back(parse_qafun(s));
  QAFun esc = escape_function(family);
  bool ok = true;
  for (const QAFun& m : maxfin_closure(family))
    if (le_star(esc, m)) ok = false;
  out.line("escape: " + serialize(esc));
  out.line(std::string("clears_maxfin_closure: ") + (ok ? "true" : "false"));
  out.data = {{"escape", serialize(esc)}, {"clears_maxfin_closure", ok}};
  return ok ? 0 : 1;
}

CoverTrace single_cover(const std::string& path) {
  CoverSequence seq = parse_cover_document(slurp(path));
  if (seq.length() != 1)
    throw std::runtime_error("expected a single-cover file, got a sequence");
  return seq.covers()[0];
}

int cmd_cover_classify(Output& out, const std::string& path) {
  CoverTags t = classify_cover(single_cover(path));
  out.line("tags: " + tags_text(t));
  out.data["tags"] = tags_json(t);
  return 0;
}

int cmd_cover_glue(Output& out, const std::string& path, const std::string& h_text) {
  CoverTrace glued = glue_cover(single_cover(path), parse_qafun(h_text));
  out.text << serialize(glued);
  CoverTags t = classify_cover(glued);
  out.line("tags: " + tags_text(t));
  out.data["glued"] = serialize(glued);
  out.data["tags"] = tags_json(t);
  return 0;
}

int cmd_cover_split(Output& out, const std::string& path, const std::string& set_text) {
  bool ok = split_cover(single_cover(path), parse_epset(set_text));
  out.line(std::string("splits: ") + (ok ? "true" : "false"));
  out.data["splits"] = ok;
  return ok ? 0 : 1;
}

int cmd_cover_glueable(Output& out, const std::string& path, const std::string& forced) {
  CoverTrace c = single_cover(path);
  GluePartition part = forced.empty() ? gamma_glueable(c)
                                      : gamma_glueable(c, parse_qafun(forced));
  bool ok = part.reverify(c);
  out.line(std::string("mode: ") +
           (part.mode == GluePartition::Mode::Case1 ? "Case1" : "Case2"));
  out.line("h: " + serialize(part.h));
  if (part.selector) out.line("selector: " + serialize(*part.selector));
  out.line(std::string("reverifies: ") + (ok ? "true" : "false"));
  out.data["mode"] = part.mode == GluePartition::Mode::Case1 ? "Case1" : "Case2";
  out.data["h"] = serialize(part.h);
  if (part.selector) out.data["selector"] = serialize(*part.selector);
  out.data["reverifies"] = ok;
  return ok ? 0 : 1;
}

int cmd_cover_game(Output& out, const std::string& path, const std::string& mode_name,
                   const std::string& schedule_text) {
  CoverSequence seq = parse_cover_document(slurp(path));
  SelectionMode mode = mode_name == "S1"     ? SelectionMode::S1
                       : mode_name == "Sfin" ? SelectionMode::Sfin
                                             : SelectionMode::Ufin;
  QAFun fn = parse_qafun(schedule_text);
  PickSchedule sched = mode == SelectionMode::S1 ? PickSchedule::picks(fn)
                                                 : PickSchedule::windows(fn);
  SelectionVerdict v = evaluate_selection(seq, sched, mode);
  json hits = json::array();
  for (std::size_t i = 0; i < v.points.size(); ++i) {
    out.line(v.points[i] + ": " + serialize(v.hit_sets[i]));
    hits.push_back({{"point", v.points[i]}, {"hits", serialize(v.hit_sets[i])}});
  }
  out.line("tags: " + tags_text(v.tags));
  out.data = {{"mode", to_string(mode)}, {"hits", hits}, {"tags", tags_json(v.tags)}};
  return 0;
}

int cmd_suite(Output& out, const std::string& name, const GenParams& params) {
  SuiteReport r = run_suite(name, params);
  out.text << r.text();
  out.data = r.json();
  std::cerr << "# wall-time: " << r.wall_ms << " ms\n";
  return r.pass() ? 0 : 1;
}

int cmd_gen(Output& out, const std::string& kind, const GenParams& params, Nat count) {
  json items = json::array();
  for (Nat i = 0; i < count; ++i) {
    if (kind == "epset") {
      EPSet a = gen_epset(params, i);
      out.line(serialize(a));
      items.push_back(serialize(a));
    } else if (kind == "qafun") {
      QAFun f = gen_qafun(params, i);
      out.line(serialize(f));
      items.push_back(serialize(f));
    } else if (kind == "family") {
      FamilyDocument doc;
      doc.family = FamilySpec::of(gen_family(params, i));
      doc.battery = gen_battery(params, i + 1000000);
      if (i) out.line("");
      out.text << serialize(doc);
      items.push_back(serialize(doc));
    } else {
      CoverTrace c = gen_cover(params, i);
      if (i) out.line("");
      out.text << serialize(c);
      items.push_back(serialize(c));
    }
  }
  out.data["items"] = items;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"omega-lab: exact combinatorics of eventually periodic sets and functions"};
  app.require_subcommand(1);

  Output out;
  GenParams params;
  params.seed = env_seed();
  app.add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", out.out_path, "Write output to a file");
  app.add_option("--seed", params.seed, "Generator seed (default OMEGA_LAB_SEED or 1)");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a function or test set membership");
  std::string fn_text, set_text;
  std::vector<Nat> at;
  eval->add_option("--fn", fn_text, "qa(...) to evaluate");
  eval->add_option("--set", set_text, "ep(...) to probe");
  eval->add_option("--at", at, "Points to evaluate at")->required();

  // compress
  auto* compress = app.add_subcommand("compress", "Compress a family by a window function");
  std::string family_path, h_text;
  compress->add_option("family", family_path, "Family file")->required();
  compress->add_option("--compressor", h_text, "Compressor qa(...)")->required();

  // classify
  auto* classify = app.add_subcommand("classify", "Classify a family against its battery");
  std::string classify_path;
  classify->add_option("family", classify_path, "Family file")->required();

  // witness
  auto* witness = app.add_subcommand("witness", "Replay a constructive witness");
  witness->require_subcommand(1);
  std::string w_family;
  Nat w_depth = 2000;
  auto* w_split1 = witness->add_subcommand("split1", "Splitter from the built slalom");
  w_split1->add_option("family", w_family, "Family file")->required();
  auto* w_roth = witness->add_subcommand("rothsplit", "Greedy disjoint streams");
  w_roth->add_option("family", w_family, "Family file")->required();
  w_roth->add_option("--depth", w_depth, "Truncation depth")->capture_default_str();
  std::vector<std::string> w_fns;
  std::string w_g, w_h;
  auto* w_split4 = witness->add_subcommand("split4", "Bound transfer through compression");
  w_split4->add_option("--f", w_fns, "Family member qa(...)")->required();
  w_split4->add_option("--g", w_g, "Bound witness qa(...)")->required();
  w_split4->add_option("--compressor", w_h, "Compressor qa(...)")->required();
  auto* w_subbase = witness->add_subcommand("subbase", "Filter subbase from a bound");
  w_subbase->add_option("--f", w_fns, "Family member qa(...)")->required();
  w_subbase->add_option("--g", w_g, "Bound witness qa(...)")->required();
  auto* w_escape = witness->add_subcommand("escape", "Escape function for a finite family");
  w_escape->add_option("--f", w_fns, "Family member qa(...)")->required();

  // cover
  auto* cover = app.add_subcommand("cover", "Cover-trace operations");
  cover->require_subcommand(1);
  std::string c_path, c_h, c_set, c_mode = "S1", c_schedule, c_force;
  auto* c_classify = cover->add_subcommand("classify", "Tag a cover");
  c_classify->add_option("cover", c_path, "Cover file")->required();
  auto* c_glue = cover->add_subcommand("glue", "Glue members into window unions");
  c_glue->add_option("cover", c_path, "Cover file")->required();
  c_glue->add_option("--compressor", c_h, "Window function qa(...)")->required();
  auto* c_split = cover->add_subcommand("split", "Split a cover by a set");
  c_split->add_option("cover", c_path, "Cover file")->required();
  c_split->add_option("--set", c_set, "Splitter ep(...)")->required();
  auto* c_glueable = cover->add_subcommand("glueable", "Partition into finite pieces");
  c_glueable->add_option("cover", c_path, "Cover file")->required();
  c_glueable->add_option("--force-h", c_force, "Diagnostic compressor qa(...)");
  auto* c_game = cover->add_subcommand("game", "Run a selection game");
  c_game->add_option("cover", c_path, "Cover sequence file")->required();
  c_game->add_option("--mode", c_mode, "S1, Sfin or Ufin")
      ->check(CLI::IsMember({"S1", "Sfin", "Ufin"}))
      ->capture_default_str();
  c_game->add_option("--schedule", c_schedule, "Schedule qa(...)")->required();

  // suite
  auto* suite = app.add_subcommand("suite", "Run a property suite");
  std::string suite_name;
  suite->add_option("name", suite_name, "Suite name")->required();
  suite->add_option("--cases", params.cases, "Cases to run")->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate seeded random objects");
  std::string gen_kind;
  Nat gen_count = 1;
  gen->add_option("kind", gen_kind, "epset, qafun, family or cover")
      ->check(CLI::IsMember({"epset", "qafun", "family", "cover"}))
      ->required();
  gen->add_option("--count", gen_count, "How many")->capture_default_str();

  // Global options (--seed, --format, --out) may appear after a subcommand.
  for (CLI::App* sc : app.get_subcommands(nullptr)) {
    sc->fallthrough();
    for (CLI::App* nested : sc->get_subcommands(nullptr)) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    int code = 0;
    if (*eval) code = cmd_eval(out, fn_text, set_text, at);
    else if (*compress) code = cmd_compress(out, family_path, h_text);
    else if (*classify) code = cmd_classify(out, classify_path);
    else if (*w_split1) code = cmd_witness_split1(out, w_family);
    else if (*w_roth) code = cmd_witness_rothsplit(out, w_family, w_depth);
    else if (*w_split4) code = cmd_witness_split4(out, w_fns, w_g, w_h);
    else if (*w_subbase) code = cmd_witness_subbase(out, w_fns, w_g);
    else if (*w_escape) code = cmd_witness_escape(out, w_fns);
    else if (*c_classify) code = cmd_cover_classify(out, c_path);
    else if (*c_glue) code = cmd_cover_glue(out, c_path, c_h);
    else if (*c_split) code = cmd_cover_split(out, c_path, c_set);
    else if (*c_glueable) code = cmd_cover_glueable(out, c_path, c_force);
    else if (*c_game) code = cmd_cover_game(out, c_path, c_mode, c_schedule);
    else if (*suite) code = cmd_suite(out, suite_name, params);
    else if (*gen) code = cmd_gen(out, gen_kind, params, gen_count);
    return out.flush(code);
  } catch (const WitnessInvalidError& e) {
    std::cerr << "witness invalid: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
