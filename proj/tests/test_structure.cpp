#include "doctest.h"

#include "syzygy/errors.hpp"
#include "syzygy/fixtures.hpp"
#include "syzygy/structure.hpp"

using namespace syz;

namespace {

QuotientRingPtr ring_of(std::vector<std::string> vars, std::vector<std::string> gens) {
  std::vector<int> w(vars.size(), 1);
  return make_quotient_ring(vars, w, Field{}, gens);
}

bool same_ideal_text(const QuotientRingPtr& a, const QuotientRingPtr& b) {
  auto text = [](const QuotientRingPtr& r) {
    std::vector<std::string> out;
    for (const auto& g : r->reduced_gb()) out.push_back(g.to_string());
    std::sort(out.begin(), out.end());
    return out;
  };
  return a->variables() == b->variables() && text(a) == text(b);
}

FPModule omega_sum(const FPModule& m, std::vector<std::size_t> idx) {
  std::vector<FPModule> parts;
  for (auto i : idx) parts.push_back(syzygy(m, i));
  return direct_sum(parts, m.ring());
}

}  // namespace

TEST_CASE("fiber products of the bundled factors") {
  auto kx = ring_of({"x"}, {});
  auto ky = ring_of({"y"}, {});
  auto kyz = ring_of({"y", "z"}, {});
  auto kx2 = ring_of({"x"}, {"x^2"});

  FiberProduct a = fiber_product(kx, ky);
  CHECK(same_ideal_text(a.ring, fixtures::r1()));
  FiberProduct b = fiber_product(kx, kyz);
  CHECK(same_ideal_text(b.ring, fixtures::r2()));
  FiberProduct c = fiber_product(kx2, ky);
  CHECK(same_ideal_text(c.ring, fixtures::r3()));

  for (const auto& [fp, s, t] : {std::tuple{a, kx, ky}, std::tuple{b, kx, kyz}, std::tuple{c, kx2, ky}}) {
    CHECK(fp.decomposition.verify());
    CHECK(depth(fp.ring) == std::min<std::size_t>({depth(s), depth(t), 1}));
  }
  CHECK_THROWS_AS(fiber_product(ring_of({"x"}, {"x"}), ky), TrivialFactorError);
  CHECK_THROWS_AS(fiber_product(kx, kx), PreconditionError);
}

TEST_CASE("2x2 minors") {
  auto s = fixtures::polynomial_ring({"x", "y"});
  auto m = Matrix::from_rows(s->ambient(), {{s->parse("x"), s->parse("y")}, {s->parse("y"), s->parse("x")}});
  auto d = determinantal_ideal_2x2(m);
  REQUIRE(d.size() == 1);
  CHECK(d[0] == s->parse("x^2 - y^2"));

  auto diag = Matrix::from_rows(s->ambient(), {{s->parse("x"), s->zero()}, {s->zero(), s->parse("y")}});
  CHECK(determinantal_ideal_2x2(diag) == std::vector<Polynomial>{s->parse("x*y")});

  auto w = make_quotient_ring({"x", "y", "z"}, {4, 5, 3}, Field{}, {});
  auto p = [&](const char* t) { return w->parse(t); };
  auto wm = Matrix::from_rows(w->ambient(), {{p("x"), p("y"), p("z")}, {p("y"), p("z^2"), p("x")}});
  auto minors = determinantal_ideal_2x2(wm);
  CHECK(minors == std::vector<Polynomial>{p("x*z^2 - y^2"), p("x^2 - y*z"), p("x*y - z^3")});
  auto bad = Matrix::from_rows(s->ambient(), {{s->parse("x"), s->parse("y")}, {s->constant(1), s->parse("x")}});
  CHECK_THROWS_AS(determinantal_ideal_2x2(bad), HomogeneityError);
}

TEST_CASE("split summands") {
  auto r1 = fixtures::r1();
  FPModule r = FPModule::free(r1, {0});
  FPModule m = FPModule::cyclic(r1, {r1->parse("x")});
  SplitReport a = split_summand(r, direct_sum(r, m));
  REQUIRE(a.verdict == Verdict::proved_yes);
  CHECK(a.certificate->verify());

  SplitReport b = split_summand(FPModule::maximal_ideal(r1), omega_sum(m, {3, 4}));
  REQUIRE(b.verdict == Verdict::proved_yes);
  CHECK(b.certificate->verify());

  auto r2 = fixtures::r2();
  FPModule my = FPModule::cyclic(r2, {r2->parse("y")});
  SplitReport c = split_summand(FPModule::maximal_ideal(r2), syzygy(my, 3));
  CHECK(c.verdict == Verdict::proved_no);
  CHECK(c.obstruction.find("nu") != std::string::npos);
}

TEST_CASE("split search is reproducible for a fixed seed") {
  auto r1 = fixtures::r1();
  FPModule m = FPModule::cyclic(r1, {r1->parse("x")});
  FPModule n = omega_sum(m, {3, 4});
  SplitReport a = split_summand(FPModule::maximal_ideal(r1), n, 16, 7);
  SplitReport b = split_summand(FPModule::maximal_ideal(r1), n, 16, 7);
  REQUIRE(a.certificate);
  REQUIRE(b.certificate);
  CHECK(a.certificate->f.matrix == b.certificate->f.matrix);
  CHECK(a.certificate->g.matrix == b.certificate->g.matrix);
}

TEST_CASE("decompositions") {
  auto r1 = fixtures::r1();
  DecomposeReport d = decompose(FPModule::maximal_ideal(r1));
  REQUIRE(d.verdict == Verdict::proved_yes);
  CHECK(d.certificate->verify());
  FPModule a = minimal_presentation(d.certificate->first);
  FPModule b = minimal_presentation(d.certificate->second);
  CHECK(a.num_generators() == 1);
  CHECK(b.num_generators() == 1);
  FPModule ix = FPModule::from_ideal(r1, {r1->parse("x")});
  FPModule iy = FPModule::from_ideal(r1, {r1->parse("y")});
  bool ab = is_isomorphic(a, ix).verdict == Verdict::proved_yes && is_isomorphic(b, iy).verdict == Verdict::proved_yes;
  bool ba = is_isomorphic(a, iy).verdict == Verdict::proved_yes && is_isomorphic(b, ix).verdict == Verdict::proved_yes;
  CHECK((ab || ba));

  CHECK(decompose(FPModule::free(r1, {0})).verdict == Verdict::proved_no);
  DecomposeReport r4 = decompose_maximal_ideal(fixtures::r4());
  CHECK(r4.verdict == Verdict::proved_no);
  CHECK(r4.reason.find("depth") != std::string::npos);
  CHECK_THROWS_AS(decompose(FPModule::zero(r1)), ZeroModuleError);

  FPModule two = direct_sum(FPModule::residue_field(r1), FPModule::cyclic(r1, {r1->parse("x")}));
  DecomposeReport t = decompose(two);
  REQUIRE(t.verdict == Verdict::proved_yes);
  CHECK(t.certificate->verify());
}

TEST_CASE("isomorphism tests") {
  auto r1 = fixtures::r1();
  FPModule mx = FPModule::cyclic(r1, {r1->parse("x")});
  FPModule my = FPModule::cyclic(r1, {r1->parse("y")});
  IsomorphismReport self = is_isomorphic(mx, mx);
  REQUIRE(self.verdict == Verdict::proved_yes);
  CHECK(self.certificate->verify());
  CHECK(is_isomorphic(syzygy(mx, 2), mx).verdict == Verdict::proved_yes);
  IsomorphismReport no = is_isomorphic(mx, my);
  CHECK(no.verdict == Verdict::proved_no);
  CHECK(no.reason == "annihilators differ");
  // R/(x) is a DVR and (y) = ann(x) is isomorphic to it.
  CHECK(is_isomorphic(mx, FPModule::from_ideal(r1, {r1->parse("y")})).verdict == Verdict::proved_yes);
}

TEST_CASE("DVR and minimal multiplicity") {
  CHECK(is_dvr(ring_of({"x"}, {})));
  CHECK_FALSE(is_dvr(ring_of({"y", "z"}, {})));
  CHECK_FALSE(is_dvr(ring_of({"x"}, {"x^2"})));
  auto r1 = fixtures::r1();
  CHECK(is_dvr(quotient_by(r1, {r1->parse("x")}, "R1/(x)")));

  MultiplicityReport m1 = minimal_multiplicity(r1);
  CHECK(m1.multiplicity == 2);
  CHECK(m1.embedding_dimension == 2);
  CHECK(m1.dimension == 1);
  CHECK(m1.holds);
  CHECK(m1.cohen_macaulay);
  CHECK(minimal_multiplicity(ring_of({"x"}, {})).holds);
  MultiplicityReport m2 = minimal_multiplicity(fixtures::r2());
  CHECK(m2.dimension == 2);
  CHECK(m2.embedding_dimension == 3);
  CHECK_FALSE(m2.cohen_macaulay);
  CHECK_FALSE(m2.note.empty());
  CHECK_THROWS_AS(minimal_multiplicity(fixtures::r5()), UnsupportedGradingError);
}

TEST_CASE("quasi-decomposable rings") {
  auto r1 = fixtures::r1();
  QuasiDecomposableReport a = quasi_decomposable(r1, {});
  CHECK(a.verdict == Verdict::proved_yes);
  CHECK(a.length_constraint_holds);

  auto r4 = fixtures::r4();
  QuasiDecomposableReport b = quasi_decomposable(r4, {r4->parse("t")});
  REQUIRE(b.verdict == Verdict::proved_yes);
  CHECK(b.decomposition->verify());
  CHECK(b.length_constraint_holds);

  auto r5 = fixtures::r5();
  QuasiDecomposableReport c = quasi_decomposable(r5, {r5->parse("z")});
  REQUIRE(c.verdict == Verdict::proved_yes);
  CHECK(c.decomposition->verify());
  FPModule a5 = minimal_presentation(c.decomposition->first);
  FPModule b5 = minimal_presentation(c.decomposition->second);
  std::vector<int> degs = {a5.generator_shifts().at(0), b5.generator_shifts().at(0)};
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<int>{4, 5});
  // k[x,y]/(x^2,xy,y^2): the square of the maximal ideal vanishes.
  auto q = c.quotient;
  for (const char* t : {"x^2", "x*y", "y^2"}) CHECK(q->is_zero(q->parse(t)));

  QuasiDecomposableReport bad = quasi_decomposable(r1, {r1->parse("x")});
  CHECK(bad.verdict == Verdict::proved_no);
  CHECK_FALSE(bad.regular.regular);
}
