// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "syzygy/audit.hpp"
#include "syzygy/battery.hpp"
#include "syzygy/errors.hpp"
#include "syzygy/fixtures.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>

using namespace syz;

namespace {

std::uint64_t base_seed() {
  if (const char* s = std::getenv("SYZYGY_SEED")) return std::strtoull(s, nullptr, 10);
  return kDefaultSeed;
}

std::vector<Polynomial> ideal(const QuotientRingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> out;
  for (const char* g : gens) out.push_back(r->parse(g));
  return out;
}

FPModule cyclic(const QuotientRingPtr& r, std::initializer_list<const char*> gens) {
  return FPModule::cyclic(r, ideal(r, gens));
}

FPModule transpose_module(const QuotientRingPtr& r) {
  auto p = [&](const char* s) { return r->parse(s); };
  Matrix m = Matrix::from_rows(r->ambient(), {{p("x"), p("0")}, {p("0"), p("x")}, {p("z"), p("-y")}});
  return FPModule(r, m, {0, 0, 0}, {1, 1});
}

Polynomial random_form(const QuotientRingPtr& r, int degree, std::mt19937_64& rng) {
  Polynomial p(r->ambient());
  const Field f = r->field();
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (const auto& m : monomials_of_degree(*r->ambient(), degree)) {
    int c = coeff(rng);
    if (c != 0) p += Polynomial::monomial(r->ambient(), Scalar(f, c), m);
  }
  return p;
}

/// Presentation with generators in degree 0 and random homogeneous columns.
FPModule random_module(const QuotientRingPtr& r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> gens(1, 2), rels(1, 3), deg(1, 2);
  const int g = gens(rng), c = rels(rng);
  std::vector<std::vector<Polynomial>> cols;
  for (int j = 0; j < c; ++j) {
    int d = deg(rng);
    std::vector<Polynomial> col;
    for (int i = 0; i < g; ++i) col.push_back(random_form(r, d, rng));
    cols.push_back(col);
  }
  Matrix p = Matrix::from_columns(r->ambient(), static_cast<std::size_t>(g), cols);
  return FPModule(r, p, std::vector<int>(static_cast<std::size_t>(g), 0));
}

bool infinite_pd(const FPModule& m) {
  auto b = free_resolution(m, 2).betti();
  return b.size() > 2 && b[2] > 0;
}

struct Line {
  bool ok = true;
  std::ostringstream detail;
  void require(bool c, const std::string& what) {
    if (!c) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Line&)>& body) {
  Line line;
  auto start = std::chrono::steady_clock::now();
  try {
    body(line);
  } catch (const std::exception& e) {
    line.ok = false;
    line.detail << " [exception: " << e.what() << "]";
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!line.ok) ++failures;
  std::printf("%s %2d %s:%s (%.0f ms)\n", line.ok ? "PASS" : "FAIL", n, title.c_str(), line.detail.str().c_str(), ms);
  std::fflush(stdout);
}

}  // namespace

int main() {
  audit::enable(true);
  audit::reset();
  const std::uint64_t seed = base_seed();
  const auto r1 = fixtures::r1(), r2 = fixtures::r2(), r3 = fixtures::r3(), r4 = fixtures::r4(), r5 = fixtures::r5();

  criterion(1, "Betti numbers of R/(y) over k[x,y,z]/(xy,xz)", [&](Line& l) {
    FPModule m = cyclic(r2, {"y"});
    auto b = free_resolution(m, 5).betti();
    l.require(b == std::vector<std::size_t>{1, 1, 1, 2, 3, 5}, "betti vector");
    l.require(truncated_linear_resolution(m, 5, 8) == truncate_table(free_resolution(m, 5).graded_betti(), 5, 8),
              "linear oracle");
    for (auto v : b) l.detail << " " << v;
  });

  criterion(2, "syzygies of R/(x) over k[x,y]/(xy) alternate", [&](Line& l) {
    FPModule m = cyclic(r1, {"x"}), odd = cyclic(r1, {"y"}), even = cyclic(r1, {"x"});
    for (std::size_t i = 1; i <= 8; ++i) {
      auto rep = is_isomorphic(syzygy(m, i), i % 2 ? odd : even, kDefaultTrials, seed);
      bool ok = rep.verdict == Verdict::proved_yes && rep.certificate && rep.certificate->verify();
      l.require(ok, "index " + std::to_string(i));
      // The other candidate must be refuted.
      auto other = is_isomorphic(syzygy(m, i), i % 2 ? even : odd, kDefaultTrials, seed);
      l.require(other.verdict == Verdict::proved_no, "index " + std::to_string(i) + " against the wrong side");
    }
    l.detail << " i=1..8 certified";
  });

  criterion(3, "maximal ideal splits off syz3 + syz4 + syz5", [&](Line& l) {
    std::vector<std::pair<std::string, FPModule>> samples{
        {"R1 R/(x)", cyclic(r1, {"x"})}, {"R1 R/(y)", cyclic(r1, {"y"})},   {"R1 k", FPModule::residue_field(r1)},
        {"R2 R/(y)", cyclic(r2, {"y"})}, {"R2 R/(x)", cyclic(r2, {"x"})},   {"R2 transpose", transpose_module(r2)},
        {"R2 k", FPModule::residue_field(r2)}, {"R3 R/(y)", cyclic(r3, {"y"})}, {"R3 R/(x)", cyclic(r3, {"x"})},
        {"R3 k", FPModule::residue_field(r3)}};
    std::mt19937_64 rng(seed);
    std::size_t random_taken = 0;
    for (int attempt = 0; attempt < 60 && random_taken < 6; ++attempt) {
      const QuotientRingPtr ring = std::vector<QuotientRingPtr>{r1, r2, r3}[attempt % 3];
      FPModule m = random_module(ring, rng);
      if (m.is_zero() || !infinite_pd(m)) continue;
      samples.emplace_back(ring->label() + " random " + std::to_string(attempt), m);
      ++random_taken;
    }
    std::size_t certified = 0;
    for (const auto& [name, m] : samples) {
      l.require(infinite_pd(m), name + " has infinite pd");
      auto rep = check_maximal_ideal_splits(m.ring(), m, kDefaultTrials, seed);
      bool ok = rep.verdict == Verdict::proved_yes && rep.certificate && rep.certificate->verify();
      l.require(ok, name);
      certified += ok;
    }
    l.require(samples.size() >= 10, "at least 10 samples");
    l.detail << " " << certified << "/" << samples.size() << " certified, seed " << seed;
  });

  criterion(4, "summand-pattern labels", [&](Line& l) {
    auto i1 = ideal(r1, {"x"}), j1 = ideal(r1, {"y"});
    auto i2 = ideal(r2, {"y", "z"}), j2 = ideal(r2, {"x"});
    auto i3 = ideal(r3, {"x"}), j3 = ideal(r3, {"y"});
    struct Want {
      QuotientRingPtr ring;
      std::vector<Polynomial> i, j;
      FPModule m;
      std::string label;
    };
    std::vector<Want> wants{{r1, i1, j1, cyclic(r1, {"x"}), "v"},
                            {r1, i1, j1, cyclic(r1, {"y"}), "iv"},
                            {r2, i2, j2, transpose_module(r2), "iv"},
                            {r2, i2, j2, cyclic(r2, {"y"}), "ii"},
                            {r3, i3, j3, cyclic(r3, {"y"}), "i"}};
    for (const auto& w : wants) {
      auto rep = classify_syzygy_case(w.ring, w.i, w.j, w.m, kDefaultTrials, seed);
      l.require(rep.label == w.label, "expected " + w.label + ", got " + rep.label);
      l.require(rep.certificate && rep.certificate->verify(), "certificate for " + w.label);
      l.require(rep.consistent, "consistency for " + w.label);
      l.detail << " " << rep.label;
    }
    auto guard = classify_syzygy_case(r3, i3, j3, cyclic(r3, {"y"}), kDefaultTrials, seed);
    l.require(guard.depth_zero_factor, "depth-0 factor detected");
    // Depth-0 guard on random modules: labels ii to v never appear.
    std::mt19937_64 rng(seed + 4);
    std::size_t sampled = 0;
    for (int attempt = 0; attempt < 40 && sampled < 5; ++attempt) {
      FPModule m = random_module(r3, rng);
      if (m.is_zero() || !infinite_pd(m)) continue;
      ++sampled;
      auto rep = classify_syzygy_case(r3, i3, j3, m, kDefaultTrials, seed);
      l.require(rep.label == "i", "guard on a random module gave " + rep.label);
      l.require(rep.consistent, "random module consistency");
    }
    l.detail << "; guard held on " << sampled << " random modules";
  });

  criterion(5, "Ext over k[x,y,z]/(xy,xz)", [&](Line& l) {
    FPModule rr = FPModule::free(r2, {0});
    auto a = ext(cyclic(r2, {"y", "z"}), rr, 1);
    auto b = ext(FPModule::residue_field(r2), rr, 1);
    l.require(a.is_zero(), "Ext1(R/I, R) = 0");
    l.require(b.finite_length_dimension && *b.finite_length_dimension == 1, "dim Ext1(k, R) = 1");
    l.detail << " Ext1(R/I,R)=" << a.describe() << ", Ext1(k,R)=" << b.describe();
  });

  criterion(6, "depth of fiber products", [&](Line& l) {
    auto mk = [](std::vector<std::string> vars, std::vector<std::string> gens) {
      return make_quotient_ring(vars, std::vector<int>(vars.size(), 1), Field{}, gens);
    };
    std::vector<std::pair<QuotientRingPtr, QuotientRingPtr>> pairs{
        {mk({"x"}, {}), mk({"y"}, {})}, {mk({"x"}, {}), mk({"y", "z"}, {})}, {mk({"x"}, {"x^2"}), mk({"y"}, {})}};
    using Factory = std::function<QuotientRingPtr(const std::string&, const std::string&)>;
    std::vector<Factory> pool{
        [&](const std::string& a, const std::string&) { return mk({a}, {}); },
        [&](const std::string& a, const std::string&) { return mk({a}, {a + "^3"}); },
        [&](const std::string& a, const std::string& b) { return mk({a, b}, {}); },
        [&](const std::string& a, const std::string& b) { return mk({a, b}, {a + "*" + b}); },
        [&](const std::string& a, const std::string& b) { return mk({a, b}, {a + "^2", a + "*" + b}); },
        [&](const std::string& a, const std::string& b) { return mk({a, b}, {a + "^2", b + "^2"}); }};
    std::mt19937_64 rng(seed + 6);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int k = 0; k < 2; ++k) pairs.emplace_back(pool[pick(rng)]("a", "b"), pool[pick(rng)]("c", "d"));
    for (const auto& [s, t] : pairs) {
      FiberProduct fp = fiber_product(s, t);
      std::size_t want = std::min<std::size_t>({depth(s), depth(t), 1});
      std::size_t got = depth(fp.ring);
      l.require(got == want && fp.decomposition.verify(), fp.ring->to_text("P"));
      l.detail << " " << got;
    }
    l.detail << ", seed " << seed + 6;
  });

  criterion(8, "syzygies over R/(t) against syzygies over R", [&](Line& l) {
    FPModule m = cyclic(r4, {"t", "x"});
    for (auto [t, u] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {1, 2}}) {
      auto rep = check_syzygy_shift(r4, ideal(r4, {"t"}), m, t, u);
      l.require(rep.betti_match, "(" + std::to_string(t) + "," + std::to_string(u) + ")");
      l.detail << " (" << t << "," << u << ") v=" << rep.free_rank;
    }
  });

  criterion(9, "graded Betti numbers against the linear oracle", [&](Line& l) {
    std::mt19937_64 rng(seed + 9);
    std::vector<QuotientRingPtr> rings{r1, r2, r3};
    std::size_t tested = 0;
    for (int attempt = 0; attempt < 100 && tested < 10; ++attempt) {
      FPModule m = random_module(rings[attempt % 3], rng);
      if (m.is_zero()) continue;
      ++tested;
      auto engine = truncate_table(free_resolution(m, 5).graded_betti(), 5, 8);
      auto oracle = truncated_linear_resolution(m, 5, 8);
      l.require(engine == oracle, "module " + std::to_string(tested) + ": " + betti_table_to_string(engine) +
                                      " vs " + betti_table_to_string(oracle));
    }
    l.require(tested == 10, "10 modules");
    l.detail << " " << tested << " random modules, seed " << seed + 9;
  });

  criterion(10, "quasi-decomposable maximal ideals", [&](Line& l) {
    auto a = quasi_decomposable(r4, ideal(r4, {"t"}), kDefaultTrials, seed);
    auto b = quasi_decomposable(r5, ideal(r5, {"z"}), kDefaultTrials, seed);
    l.require(a.verdict == Verdict::proved_yes && a.decomposition && a.decomposition->verify(), "R4 with t");
    l.require(b.verdict == Verdict::proved_yes && b.decomposition && b.decomposition->verify(), "R5 with z");
    if (b.quotient && b.decomposition) {
      auto q = b.quotient;
      auto base = make_quotient_ring(q->ambient(), {}, "S");
      l.require(ideals_equal(base, q->reduced_gb(), ideal(base, {"z", "x^2", "x*y", "y^2"})),
                "R5/(z) is k[x,y]/(x^2,xy,y^2)");
      auto [i, j] = summand_ideals(q, *b.decomposition);
      auto x = ideal(q, {"x"}), y = ideal(q, {"y"});
      bool split_xy = (ideals_equal(q, i, x) && ideals_equal(q, j, y)) ||
                      (ideals_equal(q, i, y) && ideals_equal(q, j, x));
      l.require(split_xy, "maximal ideal of R5/(z) is (x) + (y)");
    }
    auto d = decompose_maximal_ideal(r4, kDefaultTrials, seed);
    l.require(d.verdict == Verdict::proved_no && d.reason.find("depth") != std::string::npos,
              "R4 maximal ideal indecomposable by depth");
    l.detail << " R4/(t): " << to_string(a.verdict) << ", R5/(z): " << to_string(b.verdict)
             << ", m of R4: " << to_string(d.verdict);
  });

  // Runs after the others so the monitor tally covers the whole run.
  criterion(7, "Tor table over k[x,y]/(xy) and corollary monitors", [&](Line& l) {
    FPModule m = cyclic(r1, {"x"});
    ScanOptions o;
    o.seed = seed;
    ScanReport s = vanishing_scan(m, m, Functor::tor, 1, 10, o);
    for (std::size_t i = 1; i <= 10; ++i) {
      const auto& d = s.dimensions[i - 1];
      l.require(d && *d == (i % 2 ? 1 : 0), "Tor_" + std::to_string(i));
      l.detail << (i == 1 ? " " : ",") << (d ? std::to_string(*d) : "inf");
    }
    // More scans so the monitors fire, then the whole battery.
    vanishing_scan(FPModule::free(r1, {0}), m, Functor::tor, 1, 8, o);
    vanishing_scan(FPModule::free(r3, {0}), FPModule::residue_field(r3), Functor::ext, 1, 7, o);
    vanishing_scan(FPModule::residue_field(r3), FPModule::residue_field(r3), Functor::tor, 5, 8, o);
    vanishing_scan(cyclic(r2, {"y"}), cyclic(r2, {"x"}), Functor::tor, 1, 8, o);
    ScanOptions q = o;
    q.quasi_sequence = ideal(r4, {"t"});
    vanishing_scan(FPModule::free(r4, {0}), cyclic(r4, {"x"}), Functor::tor, 1, 8, q);
    BatteryConfig cfg;
    cfg.seed = seed;
    BatteryResult br = run_battery(cfg);
    l.require(br.all_passed(), "battery");
    auto snap = audit::snapshot();
    l.require(snap.corollary_checks > 0, "monitors fired");
    l.require(snap.corollary_violations == 0, "zero violations");
    l.detail << "; " << snap.corollary_checks << " monitor checks, " << snap.corollary_violations << " violations";
  });

  criterion(11, "property suites", [&](Line& l) {
    // Regular sequences stay regular on the n-th syzygy.
    struct RegSample {
      QuotientRingPtr ring;
      std::vector<Polynomial> x;
      FPModule m;
    };
    auto s3 = fixtures::polynomial_ring({"x", "y", "z"});
    std::vector<RegSample> reg{
        {r4, ideal(r4, {"t"}), cyclic(r4, {"x"})},
        {r4, ideal(r4, {"t"}), FPModule::residue_field(r4)},
        {r4, ideal(r4, {"t"}), cyclic(r4, {"t", "x"})},
        {r4, ideal(r4, {"t", "x+y"}), FPModule::residue_field(r4)},
        {r4, ideal(r4, {"x+y"}), cyclic(r4, {"y"})},
        {r1, ideal(r1, {"x+y"}), cyclic(r1, {"x"})},
        {r1, ideal(r1, {"x+y"}), FPModule::residue_field(r1)},
        {r2, ideal(r2, {"x+y"}), cyclic(r2, {"y"})},
        {s3, ideal(s3, {"x", "y"}), FPModule::residue_field(s3)},
        {s3, ideal(s3, {"z", "x", "y"}), cyclic(s3, {"x*y", "z^2"})}};
    for (std::size_t k = 0; k < reg.size(); ++k) {
      const auto& s = reg[k];
      l.require(is_regular_sequence(s.x, FPModule::free(s.ring, {0})).regular, "sequence regular on R");
      FPModule sy = syzygy(s.m, s.x.size());
      if (sy.is_zero()) continue;
      l.require(is_regular_sequence(s.x, sy).regular, "regular on the syzygy, sample " + std::to_string(k));
    }
    // Auslander-Buchsbaum.
    std::vector<FPModule> finite{cyclic(r4, {"t"}),       cyclic(r4, {"x+y"}),   cyclic(r4, {"t", "x+y"}),
                                 cyclic(s3, {"x", "y"}),  FPModule::residue_field(s3), cyclic(s3, {"x*y", "z^2"}),
                                 cyclic(r1, {"x+y"})};
    for (const auto& m : finite) {
      auto pd = projective_dimension(m, 4);
      l.require(pd.is_finite(), "finite pd sample");
      if (pd.is_finite()) l.require(pd.value + depth(m) == depth(m.ring()), "depth formula for pd");
    }
    // Tor symmetry.
    std::vector<std::pair<FPModule, FPModule>> pairs{
        {cyclic(r1, {"x"}), cyclic(r1, {"y"})},
        {cyclic(r1, {"x"}), FPModule::residue_field(r1)},
        {cyclic(r2, {"y"}), cyclic(r2, {"x"})},
        {cyclic(r2, {"y"}), transpose_module(r2)},
        {cyclic(r3, {"y"}), FPModule::residue_field(r3)},
        {cyclic(r3, {"x"}), cyclic(r3, {"y"})},
        {cyclic(r4, {"x"}), cyclic(r4, {"t"})},
        {cyclic(r4, {"t", "x"}), cyclic(r4, {"y"})},
        {FPModule::maximal_ideal(r5), cyclic(r5, {"z"})},
        {cyclic(r2, {"y", "z"}), FPModule::residue_field(r2)}};
    for (const auto& [a, b] : pairs)
      for (std::size_t i = 1; i <= 3; ++i) {
        auto ab = tor(a, b, i), ba = tor(b, a, i);
        bool same = ab.finite_length_dimension == ba.finite_length_dimension && ab.truncated_hf == ba.truncated_hf;
        l.require(same, "Tor symmetry at " + std::to_string(i));
      }
    auto snap = audit::snapshot();
    l.require(snap.bases_checked > 0 && snap.basis_violations == 0, "Buchberger criterion on every basis");
    l.require(snap.resolutions_checked > 0 && snap.resolution_violations == 0, "d^2 = 0 and minimality");
    l.detail << " " << snap.bases_checked << " bases, " << snap.resolutions_checked << " resolutions audited";
  });

  return failures == 0 ? 0 : 1;
}
