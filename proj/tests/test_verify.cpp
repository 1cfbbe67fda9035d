#include "doctest.h"

#include "syzygy/errors.hpp"
#include "syzygy/fixtures.hpp"
#include "syzygy/verify.hpp"

using namespace syz;

namespace {

std::vector<Polynomial> ideal(const QuotientRingPtr& r, std::vector<std::string> gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(r->parse(g));
  return out;
}

FPModule cyclic(const QuotientRingPtr& r, std::vector<std::string> gens) {
  return FPModule::cyclic(r, ideal(r, std::move(gens)));
}

// coker of the 3x2 matrix with rows (x,0), (0,x), (z,-y) over R2.
FPModule transpose_module(const QuotientRingPtr& r) {
  auto p = [&](const char* s) { return r->parse(s); };
  Matrix m = Matrix::from_rows(r->ambient(), {{p("x"), p("0")}, {p("0"), p("x")}, {p("z"), p("-y")}});
  return FPModule(r, m, {0, 0, 0}, {1, 1});
}

}  // namespace

TEST_CASE("restriction and extension of scalars") {
  auto r = fixtures::r1();
  auto i = ideal(r, {"x"});
  auto q = quotient_by(r, i);
  FPModule k = FPModule::residue_field(r);
  CHECK(is_free_over_quotient(cyclic(r, {"x"}), i));
  CHECK_FALSE(is_free_over_quotient(k, i));
  CHECK_FALSE(is_free_over_quotient(FPModule::free(r, {0}), i));
  FPModule back = restrict_scalars(FPModule::free(q, {0, 1}), r, i);
  CHECK(is_isomorphic(back, direct_sum(cyclic(r, {"x"}), twist(cyclic(r, {"x"}), -1))).verdict ==
        Verdict::proved_yes);
  auto w = ideal_action_witness(FPModule::free(r, {0}), i);
  REQUIRE(w.has_value());
  CHECK(w->second == 0);
}

TEST_CASE("case labels on the worked examples") {
  auto r1 = fixtures::r1();
  auto a = classify_syzygy_case(r1, ideal(r1, {"x"}), ideal(r1, {"y"}), cyclic(r1, {"x"}));
  CHECK(a.label == "v");
  CHECK(a.evidence["cases certified"] == "v");
  CHECK(a.evidence["m | syz3"] == "proved-no");
  CHECK(a.evidence["m | syz4"] == "proved-no");
  REQUIRE(a.certificate.has_value());
  CHECK(a.certificate->verify());
  CHECK(a.consistent);

  auto b = classify_syzygy_case(r1, ideal(r1, {"x"}), ideal(r1, {"y"}), cyclic(r1, {"y"}));
  CHECK(b.label == "iv");
  CHECK(b.evidence["cases certified"] == "iv");

  auto r2 = fixtures::r2();
  auto i2 = ideal(r2, {"y", "z"}), j2 = ideal(r2, {"x"});
  auto c = classify_syzygy_case(r2, i2, j2, transpose_module(r2));
  CHECK(c.label == "iv");
  CHECK(c.evidence["cases certified"] == "iv");
  CHECK(c.evidence["R/J is a DVR"] == "false");

  auto d = classify_syzygy_case(r2, i2, j2, cyclic(r2, {"y"}));
  CHECK(d.label == "ii");
  CHECK(d.evidence["cases certified"] == "ii");
  CHECK(d.evidence["syz2 free over R/J"] == "false");
  REQUIRE(d.certificate.has_value());
  CHECK(d.certificate->verify());

  auto e = classify_syzygy_case(r2, i2, j2, cyclic(r2, {"x"}));
  CHECK(e.label == "i");

  auto r3 = fixtures::r3();
  auto f = classify_syzygy_case(r3, ideal(r3, {"x"}), ideal(r3, {"y"}), cyclic(r3, {"y"}));
  CHECK(f.label == "i");
  CHECK(f.depth_zero_factor);
  CHECK(f.consistent);
  CHECK(f.evidence["m | syz3"] == "proved-yes");
}

TEST_CASE("classification preconditions") {
  auto r1 = fixtures::r1();
  auto i = ideal(r1, {"x"}), j = ideal(r1, {"y"});
  CHECK_THROWS_AS(classify_syzygy_case(r1, i, j, FPModule::free(r1, {0})), PreconditionError);
  // x + y is a nonzerodivisor, so pd R/(x+y) = 1.
  CHECK_THROWS_AS(classify_syzygy_case(r1, i, j, cyclic(r1, {"x+y"})), PreconditionError);
  CHECK_THROWS_AS(classify_syzygy_case(r1, i, i, cyclic(r1, {"x"})), PreconditionError);
  auto auto_split = classify_syzygy_case(r1, cyclic(r1, {"x"}));
  CHECK((auto_split.label == "iv" || auto_split.label == "v"));
}

TEST_CASE("summand ideals from a decomposition of the maximal ideal") {
  auto r2 = fixtures::r2();
  DecomposeReport d = decompose_maximal_ideal(r2);
  REQUIRE(d.certificate.has_value());
  auto [i, j] = summand_ideals(r2, *d.certificate);
  auto a = ideal(r2, {"y", "z"}), b = ideal(r2, {"x"});
  bool matched = (ideals_equal(r2, i, a) && ideals_equal(r2, j, b)) ||
                 (ideals_equal(r2, i, b) && ideals_equal(r2, j, a));
  CHECK(matched);
}

TEST_CASE("maximal ideal splits off syz3 + syz4 + syz5") {
  auto r1 = fixtures::r1();
  auto a = check_maximal_ideal_splits(r1, cyclic(r1, {"x"}));
  CHECK(a.verdict == Verdict::proved_yes);
  REQUIRE(a.certificate.has_value());
  CHECK(a.certificate->verify());

  auto r2 = fixtures::r2();
  CHECK(check_maximal_ideal_splits(r2, cyclic(r2, {"y"})).verdict == Verdict::proved_yes);
  auto r3 = fixtures::r3();
  CHECK(check_maximal_ideal_splits(r3, cyclic(r3, {"y"})).verdict == Verdict::proved_yes);

  try {
    check_maximal_ideal_splits(r1, cyclic(r1, {"x+y"}));
    FAIL("expected a precondition failure");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("infinite projective dimension") != std::string::npos);
  }
  CHECK_THROWS_AS(check_maximal_ideal_splits(fixtures::r4(), cyclic(fixtures::r4(), {"x"})), PreconditionError);
}

TEST_CASE("first syzygy of a module killed by a summand ideal") {
  auto r1 = fixtures::r1();
  auto a = check_syzygy_over_quotient(r1, ideal(r1, {"x"}), FPModule::residue_field(r1));
  CHECK(a.generators == 1);
  CHECK(a.betti_match);
  CHECK(a.isomorphism.verdict == Verdict::proved_yes);

  auto r2 = fixtures::r2();
  auto b = check_syzygy_over_quotient(r2, ideal(r2, {"y", "z"}), FPModule::residue_field(r2));
  CHECK(b.betti_match);
  CHECK(b.isomorphism.verdict == Verdict::proved_yes);

  // Free over R/I: only the copies of I remain.
  auto c = check_syzygy_over_quotient(r2, ideal(r2, {"y", "z"}), direct_sum(cyclic(r2, {"y", "z"}),
                                                                            twist(cyclic(r2, {"y", "z"}), -1)));
  CHECK(c.generators == 2);
  CHECK(c.betti_match);
  CHECK(c.isomorphism.verdict == Verdict::proved_yes);

  CHECK_THROWS_AS(check_syzygy_over_quotient(r1, ideal(r1, {"x"}), cyclic(r1, {"y"})), PreconditionError);
}

TEST_CASE("syzygies over R/(t) against syzygies over R") {
  auto r4 = fixtures::r4();
  auto x = ideal(r4, {"t"});
  FPModule m = cyclic(r4, {"t", "x"});
  for (auto [t, u] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {1, 2}}) {
    CAPTURE(t);
    CAPTURE(u);
    auto rep = check_syzygy_shift(r4, x, m, t, u);
    CHECK(rep.betti_match);
  }
  auto same = check_syzygy_shift(r4, {}, m, 0, 0);
  CHECK(same.betti_match);
  CHECK(same.free_rank == 0);
  CHECK_THROWS_AS(check_syzygy_shift(r4, x, m, 1, 0), PreconditionError);
  CHECK_THROWS_AS(check_syzygy_shift(r4, x, cyclic(r4, {"x"}), 1, 1), PreconditionError);
  CHECK_THROWS_AS(check_syzygy_shift(r4, ideal(r4, {"x"}), cyclic(r4, {"x"}), 1, 1), PreconditionError);
}

TEST_CASE("vanishing scans and their monitors") {
  auto r1 = fixtures::r1();
  FPModule m = cyclic(r1, {"x"});
  ScanReport a = vanishing_scan(m, m, Functor::tor, 1, 10);
  REQUIRE(a.dimensions.size() == 10);
  for (std::size_t i = 1; i <= 10; ++i) {
    CAPTURE(i);
    REQUIRE(a.dimensions[i - 1].has_value());
    CHECK(*a.dimensions[i - 1] == (i % 2 == 1 ? 1 : 0));
  }
  CHECK(a.decomposable_maximal_ideal);
  CHECK(a.violations == 0);

  ScanReport b = vanishing_scan(FPModule::free(r1, {0}), m, Functor::tor, 1, 7);
  CHECK(std::all_of(b.vanishes.begin(), b.vanishes.end(), [](bool v) { return v; }));
  CHECK_FALSE(b.checks.empty());
  CHECK(b.violations == 0);

  auto r3 = fixtures::r3();
  FPModule k = FPModule::residue_field(r3);
  ScanReport c = vanishing_scan(k, k, Functor::tor, 5, 8);
  CHECK(std::none_of(c.vanishes.begin(), c.vanishes.end(), [](bool v) { return v; }));
  CHECK(c.violations == 0);

  ScanReport d = vanishing_scan(FPModule::free(r3, {0}), k, Functor::ext, 1, 7);
  CHECK(std::all_of(d.vanishes.begin(), d.vanishes.end(), [](bool v) { return v; }));
  CHECK_FALSE(d.checks.empty());
  CHECK(d.violations == 0);

  auto r4 = fixtures::r4();
  ScanOptions opts;
  opts.quasi_sequence = ideal(r4, {"t"});
  ScanReport e = vanishing_scan(FPModule::free(r4, {0}), cyclic(r4, {"x"}), Functor::tor, 1, 8, opts);
  bool window = std::any_of(e.checks.begin(), e.checks.end(),
                            [](const CorollaryCheck& c) { return c.rule == "quasi-decomposable, Tor window"; });
  CHECK(window);
  CHECK(e.violations == 0);
}
