#include "doctest.h"

#include "syzygy/errors.hpp"
#include "syzygy/fixtures.hpp"
#include "syzygy/loci.hpp"

using namespace syz;

TEST_CASE("singular loci") {
  auto r1 = fixtures::r1();
  LocusDescription a = singular_locus(r1, 1);
  CHECK(a.is_closed_point());
  CHECK(a.validity_flags.empty());

  auto smooth = make_quotient_ring({"x", "y"}, {1, 1}, Field{}, {"x"});
  CHECK(singular_locus(smooth, 1).is_empty());

  LocusDescription d = singular_locus(fixtures::r5(), 2);
  CHECK(d.is_closed_point());
  CHECK(d.validity_flags.empty());

  LocusDescription r2 = singular_locus(fixtures::r2(), 2);
  CHECK_FALSE(r2.validity_flags.empty());
  CHECK_THROWS_AS(singular_locus(r1, 3), ShapeError);
}

TEST_CASE("minors and determinants") {
  auto s = fixtures::polynomial_ring({"x", "y", "z"});
  auto p = [&](const char* t) { return s->parse(t); };
  auto m = Matrix::from_rows(s->ambient(), {{p("x"), p("y"), p("0")}, {p("0"), p("z"), p("x")}, {p("y"), p("0"), p("z")}});
  CHECK(determinant(m) == p("x*z^2 + x*y^2"));
  CHECK(minors(m, 1).size() == 6);
  CHECK(minors(m, 3).size() == 1);
}

TEST_CASE("non-free loci") {
  auto r1 = fixtures::r1();
  CHECK(non_free_locus(FPModule::free(r1, {0, 3})).is_empty());
  CHECK(non_free_locus(FPModule::cyclic(r1, {r1->parse("x")})).is_closed_point());
  CHECK(non_free_locus(FPModule::residue_field(r1)).is_closed_point());

  auto r4 = fixtures::r4();
  // R/(x) over k[x,y,t]/(xy) is free off the line x = y = 0.
  LocusDescription nx = non_free_locus(FPModule::cyclic(r4, {r4->parse("x")}));
  CHECK_FALSE(nx.is_empty());
  CHECK_FALSE(nx.is_closed_point());
  CHECK(radical_contains(r4, nx.defining_ideal, r4->parse("x")));
  CHECK(radical_contains(r4, nx.defining_ideal, r4->parse("y")));
  CHECK_FALSE(radical_contains(r4, nx.defining_ideal, r4->parse("t")));
}

TEST_CASE("infinite projective dimension loci") {
  auto r1 = fixtures::r1();
  CHECK(ipd_locus(FPModule::free(r1, {0}), 1).is_empty());
  FPModule mx = FPModule::cyclic(r1, {r1->parse("x")});
  LocusDescription ipd = ipd_locus(mx, 1);
  CHECK(ipd.is_closed_point());
  // R/(x) is maximal Cohen-Macaulay, so the two loci agree.
  CHECK(same_locus(non_free_locus(mx), ipd));

  auto r4 = fixtures::r4();
  CHECK(ipd_locus(FPModule::cyclic(r4, {r4->parse("t")}), 2).is_empty());
  CHECK(ipd_locus(FPModule::cyclic(r4, {r4->parse("t")}), 2).validity_flags.empty());
}
