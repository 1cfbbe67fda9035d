#include "syzygy/battery.hpp"

#include "syzygy/errors.hpp"
#include "syzygy/fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

namespace syz {

namespace {

struct Context {
  bool perturbed = false;
  std::size_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  Field field{};

  std::vector<Polynomial> ideal(const QuotientRingPtr& r, std::initializer_list<const char*> gens) const {
    std::vector<Polynomial> out;
    for (const char* g : gens) out.push_back(r->parse(g));
    return out;
  }
  /// Fixture module; a perturbed run multiplies its first presentation entry
  /// by the first variable.
  FPModule use(const FPModule& m) const {
    if (!perturbed || m.presentation().cols() == 0) return m;
    Matrix p = m.presentation();
    p(0, 0) = p(0, 0) * m.ring()->var(0);
    return FPModule(m.ring(), p, m.generator_shifts());
  }
  FPModule cyclic(const QuotientRingPtr& r, std::initializer_list<const char*> gens) const {
    return use(FPModule::cyclic(r, ideal(r, gens)));
  }
};

using Outcome = std::pair<bool, std::string>;

struct Check {
  std::string name;
  std::string anchor;
  std::function<Outcome(const Context&)> run;
};

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

FPModule transpose_module(const QuotientRingPtr& r) {
  auto p = [&](const char* s) { return r->parse(s); };
  Matrix m = Matrix::from_rows(r->ambient(), {{p("x"), p("0")}, {p("0"), p("x")}, {p("z"), p("-y")}});
  return FPModule(r, m, {0, 0, 0}, {1, 1});
}

Outcome displayed_resolution(const Context& c) {
  auto r = fixtures::r2(c.field);
  auto b = free_resolution(c.cyclic(r, {"y"}), 5).betti();
  const std::vector<std::size_t> want{1, 1, 1, 2, 3, 5};
  return {b == want, "betti " + join(b)};
}

Outcome alternating_syzygies(const Context& c) {
  auto r = fixtures::r1(c.field);
  FPModule m = c.cyclic(r, {"x"});
  FPModule odd = FPModule::cyclic(r, c.ideal(r, {"y"})), even = FPModule::cyclic(r, c.ideal(r, {"x"}));
  std::string detail;
  bool ok = true;
  for (std::size_t i = 1; i <= 8; ++i) {
    auto rep = is_isomorphic(syzygy(m, i), i % 2 ? odd : even, c.trials, c.seed);
    bool good = rep.verdict == Verdict::proved_yes && rep.certificate && rep.certificate->verify();
    ok = ok && good;
    detail += (i > 1 ? " " : "") + std::to_string(i) + ":" + to_string(rep.verdict);
  }
  return {ok, detail};
}

Outcome three_syzygy_summand(const Context& c) {
  auto r1 = fixtures::r1(c.field), r2 = fixtures::r2(c.field), r3 = fixtures::r3(c.field);
  std::vector<std::pair<std::string, FPModule>> cases{
      {"R1 R/(x)", c.cyclic(r1, {"x"})},  {"R1 R/(y)", c.cyclic(r1, {"y"})},
      {"R2 R/(y)", c.cyclic(r2, {"y"})},  {"R2 R/(x)", c.cyclic(r2, {"x"})},
      {"R2 transpose", c.use(transpose_module(r2))}, {"R3 R/(y)", c.cyclic(r3, {"y"})},
      {"R3 R/(x)", c.cyclic(r3, {"x"})}};
  bool ok = true;
  std::string detail;
  for (const auto& [name, m] : cases) {
    auto rep = check_maximal_ideal_splits(m.ring(), m, c.trials, c.seed);
    bool good = rep.verdict == Verdict::proved_yes && rep.certificate && rep.certificate->verify();
    ok = ok && good;
    detail += (detail.empty() ? "" : "; ") + name + ": " + to_string(rep.verdict);
  }
  return {ok, detail};
}

Outcome case_labels(const Context& c) {
  auto r1 = fixtures::r1(c.field), r2 = fixtures::r2(c.field), r3 = fixtures::r3(c.field);
  struct Case {
    std::string name;
    QuotientRingPtr ring;
    std::vector<Polynomial> i, j;
    FPModule m;
    std::string want;
  };
  std::vector<Case> cases{
      {"R1 R/(x)", r1, c.ideal(r1, {"x"}), c.ideal(r1, {"y"}), c.cyclic(r1, {"x"}), "v"},
      {"R1 R/(y)", r1, c.ideal(r1, {"x"}), c.ideal(r1, {"y"}), c.cyclic(r1, {"y"}), "iv"},
      {"R2 transpose", r2, c.ideal(r2, {"y", "z"}), c.ideal(r2, {"x"}), c.use(transpose_module(r2)), "iv"},
      {"R2 R/(y)", r2, c.ideal(r2, {"y", "z"}), c.ideal(r2, {"x"}), c.cyclic(r2, {"y"}), "ii"},
      {"R3 R/(y)", r3, c.ideal(r3, {"x"}), c.ideal(r3, {"y"}), c.cyclic(r3, {"y"}), "i"}};
  bool ok = true;
  std::string detail;
  for (const auto& k : cases) {
    auto rep = classify_syzygy_case(k.ring, k.i, k.j, k.m, c.trials, c.seed);
    bool good = rep.label == k.want && rep.consistent && rep.certificate && rep.certificate->verify();
    if (k.want == "i") good = good && rep.depth_zero_factor;
    ok = ok && good;
    detail += (detail.empty() ? "" : "; ") + k.name + ": " + rep.label;
  }
  return {ok, detail};
}

Outcome ext_values(const Context& c) {
  auto r = fixtures::r2(c.field);
  FPModule rr = FPModule::free(r, {0});
  auto a = ext(c.cyclic(r, {"y", "z"}), rr, 1);
  auto b = ext(FPModule::residue_field(r), rr, 1);
  bool ok = a.is_zero() && b.finite_length_dimension && *b.finite_length_dimension == 1;
  return {ok, "Ext1(R/I,R): " + a.describe() + "; Ext1(k,R): " + b.describe()};
}

Outcome depth_formula(const Context& c) {
  auto ring = [&](std::vector<std::string> vars, std::vector<std::string> gens) {
    return make_quotient_ring(vars, std::vector<int>(vars.size(), 1), c.field, gens);
  };
  std::vector<std::pair<QuotientRingPtr, QuotientRingPtr>> pairs{
      {ring({"x"}, {}), ring({"y"}, {})},
      {ring({"x"}, {}), ring({"y", "z"}, {})},
      {ring({"x"}, {"x^2"}), ring({"y"}, {})}};
  bool ok = true;
  std::string detail;
  for (const auto& [s, t] : pairs) {
    FiberProduct fp = fiber_product(s, t);
    std::size_t want = std::min<std::size_t>({depth(s), depth(t), 1});
    std::size_t got = depth(fp.ring);
    ok = ok && got == want && fp.decomposition.verify();
    detail += (detail.empty() ? "" : " ") + std::to_string(got) + "=" + std::to_string(want);
  }
  return {ok, detail};
}

Outcome tor_table(const Context& c) {
  auto r = fixtures::r1(c.field);
  FPModule m = c.cyclic(r, {"x"});
  ScanOptions o;
  o.trials = c.trials;
  o.seed = c.seed;
  ScanReport s = vanishing_scan(m, m, Functor::tor, 1, 10, o);
  bool ok = s.violations == 0;
  std::string detail;
  for (std::size_t i = 1; i <= 10; ++i) {
    const auto& d = s.dimensions[i - 1];
    ok = ok && d && *d == (i % 2 ? 1 : 0);
    detail += (i > 1 ? "," : "") + (d ? std::to_string(*d) : std::string("inf"));
  }
  return {ok, detail + " violations " + std::to_string(s.violations)};
}

Outcome syzygy_shift(const Context& c) {
  auto r = fixtures::r4(c.field);
  FPModule m = c.cyclic(r, {"t", "x"});
  bool ok = true;
  std::string detail;
  for (auto [t, u] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {1, 2}}) {
    auto rep = check_syzygy_shift(r, c.ideal(r, {"t"}), m, t, u);
    ok = ok && rep.betti_match;
    detail += (detail.empty() ? "" : " ") + std::string("(") + std::to_string(t) + "," + std::to_string(u) +
              "):" + (rep.betti_match ? "match" : "differ") + " v=" + std::to_string(rep.free_rank);
  }
  return {ok, detail};
}

Outcome quasi(const Context& c) {
  auto r4 = fixtures::r4(c.field), r5 = fixtures::r5(c.field);
  auto a = quasi_decomposable(r4, c.ideal(r4, {"t"}), c.trials, c.seed);
  auto b = quasi_decomposable(r5, c.ideal(r5, {"z"}), c.trials, c.seed);
  auto d = decompose_maximal_ideal(r4, c.trials, c.seed);
  bool ok = a.verdict == Verdict::proved_yes && b.verdict == Verdict::proved_yes && d.verdict == Verdict::proved_no;
  ok = ok && a.decomposition && a.decomposition->verify() && b.decomposition && b.decomposition->verify();
  return {ok, "R4/(t): " + to_string(a.verdict) + "; R5/(z): " + to_string(b.verdict) + "; m of R4: " +
                  to_string(d.verdict)};
}

Outcome over_quotient(const Context& c) {
  auto r1 = fixtures::r1(c.field), r2 = fixtures::r2(c.field);
  auto a = check_syzygy_over_quotient(r1, c.ideal(r1, {"x"}), FPModule::residue_field(r1), c.trials, c.seed);
  auto b = check_syzygy_over_quotient(r2, c.ideal(r2, {"y", "z"}), FPModule::residue_field(r2), c.trials, c.seed);
  bool ok = a.betti_match && b.betti_match && a.isomorphism.verdict == Verdict::proved_yes &&
            b.isomorphism.verdict == Verdict::proved_yes;
  return {ok, "R1: " + to_string(a.isomorphism.verdict) + "; R2: " + to_string(b.isomorphism.verdict)};
}

const std::vector<Check>& checks() {
  static const std::vector<Check> all{
      {"displayed-resolution", "anchor:displayed-resolution", displayed_resolution},
      {"alternating-syzygies", "anchor:alternating-syzygies", alternating_syzygies},
      {"summand-of-syzygies", "anchor:summand-of-syzygies", three_syzygy_summand},
      {"case-labels", "anchor:case-labels", case_labels},
      {"ext-values", "anchor:ext-values", ext_values},
      {"depth-formula", "anchor:depth-formula", depth_formula},
      {"tor-table", "anchor:tor-table", tor_table},
      {"syzygy-shift", "anchor:syzygy-shift", syzygy_shift},
      {"quasi-decomposable", "anchor:quasi-decomposable", quasi},
      {"syzygy-over-quotient", "anchor:syzygy-over-quotient", over_quotient},
  };
  return all;
}

}  // namespace

bool BatteryResult::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

report::json BatteryResult::to_json() const {
  report::json out = report::json::array();
  for (const auto& c : checks)
    out.push_back(report::json{{"name", c.name},
                               {"paper_anchor", c.anchor},
                               {"status", c.passed ? "pass" : "fail"},
                               {"detail", c.detail},
                               {"elapsed_ms", c.elapsed_ms},
                               {"seed", c.seed}});
  return out;
}

std::vector<std::string> battery_check_names() {
  std::vector<std::string> out;
  for (const auto& c : checks()) out.push_back(c.name);
  return out;
}

BatteryResult run_battery(const BatteryConfig& config) {
  auto names = battery_check_names();
  for (const auto* list : {&config.only, &config.perturb})
    for (const auto& n : *list)
      if (std::find(names.begin(), names.end(), n) == names.end()) throw Error("unknown battery check '" + n + "'");
  auto listed = [](const std::vector<std::string>& v, const std::string& n) {
    return std::find(v.begin(), v.end(), n) != v.end();
  };
  BatteryResult result;
  for (const auto& check : checks()) {
    if (!config.only.empty() && !listed(config.only, check.name)) continue;
    Context ctx{listed(config.perturb, check.name), config.trials, config.seed, config.field};
    CheckResult r{check.name, check.anchor, false, {}, 0, config.seed};
    auto start = std::chrono::steady_clock::now();
    try {
      auto [ok, detail] = check.run(ctx);
      r.passed = ok;
      r.detail = detail;
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    result.checks.push_back(std::move(r));
  }
  return result;
}

}  // namespace syz
