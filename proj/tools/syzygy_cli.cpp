// Command-line front end. Every command prints one JSON report on stdout.
// Exit codes: 0 pass, 1 check failure, 2 input error.

#include "syzygy/battery.hpp"
#include "syzygy/errors.hpp"
#include "syzygy/loci.hpp"
#include "syzygy/report.hpp"
#include "syzygy/textformat.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <regex>

using namespace syz;
using report::json;

namespace {

struct Globals {
  std::string field;
  std::uint64_t seed = kDefaultSeed;
  std::size_t trials = kDefaultTrials;
  int degree_bound = -1;
  std::size_t length = kDefaultResolutionLength;
};

struct Args {
  std::string file;
  std::vector<std::string> names;
  std::size_t index = 1;
  std::string functor = "tor";
  std::size_t from = 1, to = 10;
  std::string sequence;
  std::string ideals;
  std::string kind = "singular";
  std::size_t codim = 0;
  int dim = -1;
  std::vector<std::string> only, perturb;
};

class InputError : public Error {
 public:
  using Error::Error;
};

/// NAME, RING (its maximal ideal), syzN(EXPR) or EXPR+EXPR.
FPModule resolve_module(const Document& doc, const std::string& expr, QuotientRingPtr* ring_out = nullptr) {
  auto parts = split_top_level(std::regex_replace(expr, std::regex("\\+"), ","));
  std::vector<FPModule> mods;
  QuotientRingPtr ring;
  static const std::regex syz_re("syz([0-9]+)\\((.*)\\)");
  for (const auto& p : parts) {
    std::smatch m;
    FPModule mod = [&] {
      if (std::regex_match(p, m, syz_re))
        return syzygy(resolve_module(doc, m[2].str()), std::stoul(m[1].str()));
      if (doc.rings.count(p)) return FPModule::maximal_ideal(doc.ring(p));
      if (doc.modules.count(p)) return doc.module(p);
      if (doc.ideals.count(p)) return FPModule::from_ideal(doc.ring_of(p), doc.ideal(p));
      throw InputError("unknown module expression '" + p + "'");
    }();
    if (ring) require_same_ring(*ring, *mod.ring());
    ring = mod.ring();
    mods.push_back(mod);
  }
  if (ring_out) *ring_out = ring;
  return mods.size() == 1 ? mods.front() : direct_sum(mods, ring);
}

const QuotientRingPtr& ring_named(const Document& doc, const std::string& name) {
  if (doc.rings.count(name)) return doc.ring(name);
  return doc.ring_of(name);
}

void need(const Args& a, std::size_t n, const std::string& usage) {
  if (a.names.size() != n) throw InputError("usage: " + usage);
}

bool run(const std::string& verb, const Globals& g, const Args& a, report::Envelope& env) {
  if (verb == "battery") {
    BatteryConfig c;
    c.only = a.only;
    c.perturb = a.perturb;
    c.trials = g.trials;
    c.seed = g.seed;
    if (!g.field.empty()) c.field = parse_field(g.field);
    env.paper_anchor = "anchor:battery";
    env.inputs_echo["only"] = a.only;
    env.inputs_echo["perturb"] = a.perturb;
    BatteryResult r = run_battery(c);
    env.certificates["checks"] = r.to_json();
    return r.all_passed();
  }

  ParseOptions po;
  if (!g.field.empty()) po.default_field = parse_field(g.field);
  Document doc = parse_document_file(a.file, po);
  env.inputs_echo["file"] = a.file;
  env.inputs_echo["names"] = a.names;
  auto& out = env.certificates;

  if (verb == "resolve" || verb == "betti") {
    need(a, 1, verb + " FILE MODULE");
    MinimalResolution res = free_resolution(resolve_module(doc, a.names[0]), g.length);
    BettiTable t = res.graded_betti();
    if (g.degree_bound >= 0) t = truncate_table(t, g.length, g.degree_bound);
    out["betti"] = res.betti();
    out["graded_betti"] = report::betti(t);
    out["terminated"] = res.terminated();
    if (verb == "resolve") {
      json ds = json::array();
      for (std::size_t i = 1; i <= res.length(); ++i) ds.push_back(report::matrix(res.matrix(i)));
      out["differentials"] = ds;
      out["verified"] = res.verify();
      return res.verify();
    }
    return true;
  }
  if (verb == "syzygy") {
    need(a, 1, "syzygy FILE MODULE --index I");
    FPModule s = syzygy(resolve_module(doc, a.names[0]), a.index);
    out["module"] = report::module(s);
    out["number_of_generators"] = s.num_generators();
    return true;
  }
  if (verb == "ext" || verb == "tor") {
    need(a, 2, verb + " FILE M N --index I");
    FPModule m = resolve_module(doc, a.names[0]), n = resolve_module(doc, a.names[1]);
    HomologyReport h = verb == "ext" ? ext(m, n, a.index) : tor(m, n, a.index);
    out[verb] = report::homology(h);
    return true;
  }
  if (verb == "depth") {
    need(a, 1, "depth FILE NAME");
    const std::string& nm = a.names[0];
    out["depth"] = doc.rings.count(nm) ? depth(doc.ring(nm)) : depth(resolve_module(doc, nm));
    return true;
  }
  if (verb == "decompose") {
    need(a, 1, "decompose FILE MODULE");
    const std::string& nm = a.names[0];
    DecomposeReport r = doc.rings.count(nm) ? decompose_maximal_ideal(doc.ring(nm), g.trials, g.seed)
                                            : decompose(resolve_module(doc, nm), g.trials, g.seed);
    out["decomposition"] = report::decompose(r);
    return r.verdict != Verdict::not_found;
  }
  if (verb == "split") {
    need(a, 2, "split FILE M N");
    SplitReport r = split_summand(resolve_module(doc, a.names[0]), resolve_module(doc, a.names[1]), g.trials, g.seed);
    out["split"] = report::split(r);
    return r.verdict == Verdict::proved_yes;
  }
  if (verb == "fiber-product") {
    need(a, 2, "fiber-product FILE S T");
    FiberProduct fp = fiber_product(doc.ring(a.names[0]), doc.ring(a.names[1]));
    out["ring"] = fp.ring->to_text(a.names[0] + "x" + a.names[1]);
    out["decomposition"] = report::decomposition(fp.decomposition);
    out["depth"] = depth(fp.ring);
    return fp.decomposition.verify();
  }
  if (verb == "classify") {
    need(a, 2, "classify FILE RING MODULE [--ideals I,J]");
    env.paper_anchor = "anchor:case-labels";
    const QuotientRingPtr& ring = doc.ring(a.names[0]);
    FPModule m = resolve_module(doc, a.names[1]);
    SyzygyCaseReport r = [&] {
      if (a.ideals.empty()) return classify_syzygy_case(ring, m, g.trials, g.seed);
      auto ij = split_top_level(a.ideals);
      if (ij.size() != 2) throw InputError("--ideals takes two ideal names");
      return classify_syzygy_case(ring, doc.ideal(ij[0]), doc.ideal(ij[1]), m, g.trials, g.seed);
    }();
    out["classification"] = report::syzygy_case(r);
    return r.label != "none-detected" && r.consistent;
  }
  if (verb == "check-summand") {
    need(a, 2, "check-summand FILE RING MODULE");
    env.paper_anchor = "anchor:summand-of-syzygies";
    SplitReport r = check_maximal_ideal_splits(doc.ring(a.names[0]), resolve_module(doc, a.names[1]), g.trials, g.seed);
    out["split"] = report::split(r);
    return r.verdict == Verdict::proved_yes;
  }
  if (verb == "scan") {
    need(a, 2, "scan FILE M N --functor tor|ext --from A --to B [--sequence IDEAL]");
    env.paper_anchor = "anchor:tor-table";
    if (a.functor != "tor" && a.functor != "ext") throw InputError("--functor must be tor or ext");
    ScanOptions o;
    o.trials = g.trials;
    o.seed = g.seed;
    if (!a.sequence.empty()) o.quasi_sequence = doc.ideal(a.sequence);
    ScanReport r = vanishing_scan(resolve_module(doc, a.names[0]), resolve_module(doc, a.names[1]),
                                  a.functor == "tor" ? Functor::tor : Functor::ext, a.from, a.to, o);
    out["scan"] = report::scan(r);
    return r.violations == 0;
  }
  if (verb == "locus") {
    need(a, 1, "locus FILE NAME --kind singular|non-free|ipd");
    LocusDescription l = [&] {
      if (a.kind == "singular") return singular_locus(ring_named(doc, a.names[0]), a.codim);
      FPModule m = resolve_module(doc, a.names[0]);
      if (a.kind == "non-free") return non_free_locus(m);
      if (a.kind == "ipd")
        return ipd_locus(m, a.dim >= 0 ? static_cast<std::size_t>(a.dim)
                                       : static_cast<std::size_t>(std::max(0, krull_dimension(m.ring()))));
      throw InputError("--kind must be singular, non-free or ipd");
    }();
    out["locus"] = report::locus(l);
    return true;
  }
  throw InputError("unknown command '" + verb + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with syzygies over graded quotient rings"};
  app.require_subcommand(1);
  Globals g;
  Args a;
  app.add_option("--field", g.field, "GF(p) or QQ; replaces k in input files");
  app.add_option("--seed", g.seed, "random seed")->envname("SYZYGY_SEED");
  app.add_option("--trials", g.trials, "random trials per search");
  app.add_option("--degree-bound", g.degree_bound, "truncate Betti tables at this internal degree");
  app.add_option("--length", g.length, "resolution length");

  const std::vector<std::pair<std::string, std::string>> verbs{
      {"resolve", "minimal free resolution"},
      {"betti", "graded Betti table"},
      {"syzygy", "syzygy module"},
      {"ext", "Ext module"},
      {"tor", "Tor module"},
      {"depth", "depth of a ring or module"},
      {"decompose", "split a module into two summands"},
      {"split", "is M a direct summand of N"},
      {"fiber-product", "fiber product of two rings"},
      {"classify", "which summand pattern the syzygies show"},
      {"check-summand", "maximal ideal inside syz3 + syz4 + syz5"},
      {"scan", "Tor or Ext vanishing scan with consistency monitors"},
      {"locus", "singular, non-free or infinite projective dimension locus"},
      {"battery", "run the bundled checks"}};
  std::string chosen;
  for (const auto& [name, help] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&chosen, n = name] { chosen = n; });
    if (name == "battery") {
      sub->add_option("--only", a.only, "check names")->delimiter(',');
      sub->add_option("--perturb", a.perturb, "checks to run on perturbed fixtures")->delimiter(',');
      continue;
    }
    sub->add_option("file", a.file, "input file")->required();
    sub->add_option("names", a.names, "objects named in the file");
    if (name == "syzygy" || name == "ext" || name == "tor") sub->add_option("-i,--index", a.index, "homological index");
    if (name == "scan") {
      sub->add_option("--functor", a.functor, "tor or ext");
      sub->add_option("--from", a.from, "first index");
      sub->add_option("--to", a.to, "last index");
      sub->add_option("--sequence", a.sequence, "ideal holding a regular sequence");
    }
    if (name == "classify") sub->add_option("--ideals", a.ideals, "I,J with maximal ideal I + J");
    if (name == "locus") {
      sub->add_option("--kind", a.kind, "singular, non-free or ipd");
      sub->add_option("--codim", a.codim, "codimension for the Jacobian criterion");
      sub->add_option("--dim", a.dim, "dimension for the ipd locus");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  report::Envelope env;
  env.command = chosen;
  env.seed = g.seed;
  env.paper_anchor = "n/a";
  env.inputs_echo["field"] = g.field.empty() ? "k" : g.field;
  env.inputs_echo["trials"] = g.trials;
  auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    bool ok = run(chosen, g, a, env);
    env.status = ok ? "pass" : "fail";
    code = ok ? 0 : 1;
  } catch (const std::exception& e) {
    env.status = "error";
    env.certificates["error"] = e.what();
    code = 2;
  }
  env.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cout << env.to_json().dump(2) << "\n";
  return code;
}
