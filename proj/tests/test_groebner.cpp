#include "doctest.h"

#include "syzygy/audit.hpp"
#include "syzygy/errors.hpp"
#include "syzygy/fixtures.hpp"
#include "syzygy/groebner.hpp"

#include <random>

using namespace syz;

namespace {

/// Independent S-pair saturation check on ideals: every S-polynomial of the
/// basis, computed directly with Polynomial arithmetic, reduces to zero by
/// naive division.
bool naive_s_pairs_vanish(const std::vector<Polynomial>& basis) {
  auto divide = [&](Polynomial f) {
    Polynomial rem(f.ring());
    while (!f.is_zero()) {
      const Term lt = f.leading_term();
      bool reduced = false;
      for (const auto& g : basis) {
        if (g.leading_term().mono.divides(lt.mono)) {
          Scalar c = lt.coeff / g.leading_term().coeff;
          f -= g.times_monomial(c, lt.mono.quotient(g.leading_term().mono));
          reduced = true;
          break;
        }
      }
      if (!reduced) {
        rem += Polynomial::monomial(f.ring(), lt.coeff, lt.mono);
        f -= Polynomial::monomial(f.ring(), lt.coeff, lt.mono);
      }
    }
    return rem;
  };
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& f = basis[i];
      const auto& g = basis[j];
      Monomial l = f.ring()->lcm(f.leading_term().mono, g.leading_term().mono);
      Polynomial s = f.times_monomial(g.leading_term().coeff, l.quotient(f.leading_term().mono)) -
                     g.times_monomial(f.leading_term().coeff, l.quotient(g.leading_term().mono));
      if (!divide(s).is_zero()) return false;
    }
  return true;
}

ModuleVector mv(const QuotientRingPtr& r, std::initializer_list<const char*> entries) {
  ModuleVector v;
  for (const char* e : entries) v.push_back(r->parse(e));
  return v;
}

}  // namespace

TEST_CASE("single monomial ideal is its own basis") {
  auto kxy = fixtures::polynomial_ring({"x", "y"});
  GroebnerBasis gb = buchberger({{kxy->parse("x*y")}}, kxy);
  REQUIRE(gb.elements().size() == 1);
  CHECK(gb.elements()[0][0] == kxy->parse("x*y"));
  CHECK(gb.verify());
}

TEST_CASE("weighted determinantal ideal basis passes an independent S-pair oracle") {
  auto r5 = fixtures::r5();
  CHECK(naive_s_pairs_vanish(r5->reduced_gb()));
  auto amb = make_quotient_ring(r5->ambient(), {});
  GroebnerBasis gb = buchberger({{r5->parse("x*z^2-y^2")}, {r5->parse("x^2-y*z")}, {r5->parse("x*y-z^3")}}, amb);
  CHECK(gb.verify());
  std::vector<Polynomial> flat;
  for (const auto& e : gb.elements()) flat.push_back(e[0]);
  CHECK(naive_s_pairs_vanish(flat));
}

TEST_CASE("column module of a presentation over R2") {
  auto r2 = fixtures::r2();
  std::vector<ModuleVector> cols{mv(r2, {"x", "0", "z"}), mv(r2, {"0", "x", "-y"})};
  GroebnerBasis gb(r2, {0, 0, 0}, cols);
  CHECK(gb.verify());
  for (const auto& c : cols) CHECK(gb.contains(c));
  CHECK(!gb.contains(mv(r2, {"y", "0", "0"})));
}

TEST_CASE("normal form examples") {
  auto kxy = fixtures::polynomial_ring({"x", "y"});
  GroebnerBasis xy = buchberger({{kxy->parse("x*y")}}, kxy);
  CHECK(normal_form({kxy->parse("x*y")}, xy)[0].is_zero());
  CHECK(normal_form({kxy->parse("x^2+x*y")}, xy)[0] == kxy->parse("x^2"));
  auto kxyz = fixtures::polynomial_ring({"x", "y", "z"});
  GroebnerBasis b = buchberger({{kxyz->parse("x*y")}, {kxyz->parse("x*z")}}, kxyz);
  CHECK(normal_form({kxyz->parse("x^2*y")}, b)[0].is_zero());
}

TEST_CASE("normal form is a projection") {
  auto r2 = fixtures::r2();
  GroebnerBasis gb(r2, {0, 0}, {mv(r2, {"y", "z"}), mv(r2, {"x", "0"})});
  std::mt19937_64 rng(9);
  const char* pool[] = {"x^2", "y*z", "z^2", "x*y", "y^2+z^2", "0", "x*z-y^2"};
  for (int i = 0; i < 30; ++i) {
    ModuleVector v = mv(r2, {pool[rng() % 7], pool[rng() % 7]});
    ModuleVector n = gb.normal_form(v);
    CHECK(gb.normal_form(n) == n);
    ModuleVector diff{v[0] - n[0], v[1] - n[1]};
    CHECK(gb.contains(diff));
    const auto leading = gb.leading_monomials();
    for (std::size_t c = 0; c < 2; ++c)
      for (const auto& t : n[c].terms())
        for (const auto& lm : leading[c]) CHECK(!lm.divides(t.mono));
  }
}

TEST_CASE("syzygy examples") {
  auto r1 = fixtures::r1();
  Matrix m = Matrix::from_rows(r1->ambient(), {{r1->parse("x"), r1->parse("y")}});
  auto syz = syzygy_basis(m, r1, {0}, {1, 1});
  REQUIRE(syz.size() == 2);
  for (const auto& v : syz.vectors) CHECK(r1->is_zero(m.apply(v)[0]));
  CHECK(syz.degrees == std::vector<int>{2, 2});

  auto kx = fixtures::polynomial_ring({"x"});
  Matrix mx = Matrix::from_rows(kx->ambient(), {{kx->parse("x")}});
  CHECK(syzygy_basis(mx, kx, {0}, {1}).size() == 0);

  auto r2 = fixtures::r2();
  Matrix my = Matrix::from_rows(r2->ambient(), {{r2->parse("y")}});
  auto sy = syzygy_basis(my, r2, {0}, {1});
  REQUIRE(sy.size() == 1);
  CHECK(ideals_equal(r2, {sy.vectors[0][0]}, {r2->parse("x")}));
}

TEST_CASE("syzygies compose to zero and the chain condition holds") {
  auto r2 = fixtures::r2();
  Matrix m = Matrix::from_rows(r2->ambient(), {{r2->parse("y"), r2->parse("z"), r2->parse("x^2")}});
  auto s1 = syzygy_basis(m, r2, {0}, {1, 1, 2});
  Matrix S1 = Matrix::from_columns(r2->ambient(), 3, s1.vectors);
  Matrix prod = m * S1;
  for (std::size_t c = 0; c < prod.cols(); ++c) CHECK(r2->is_zero(prod(0, c)));
  auto s2 = syzygy_basis(S1, r2, {1, 1, 2}, s1.degrees);
  Matrix S2 = Matrix::from_columns(r2->ambient(), S1.cols(), s2.vectors);
  Matrix prod2 = S1 * S2;
  for (std::size_t r = 0; r < prod2.rows(); ++r)
    for (std::size_t c = 0; c < prod2.cols(); ++c) CHECK(r2->is_zero(prod2(r, c)));
}

TEST_CASE("ideal helpers") {
  auto r2 = fixtures::r2();
  auto q = ideal_quotient(r2, {}, r2->parse("y"));
  CHECK(ideals_equal(r2, q, {r2->parse("x")}));
  auto inter = ideal_intersection(r2, {r2->parse("y"), r2->parse("z")}, {r2->parse("z"), r2->parse("x")});
  CHECK(ideals_equal(r2, inter, {r2->parse("z")}));
  CHECK(ideal_contains(r2, {r2->parse("y"), r2->parse("z")}, r2->parse("y^2+z*x")));
  CHECK(is_unit_ideal(r2, {r2->parse("x"), r2->constant(2)}));
}

TEST_CASE("annihilators of cokernels") {
  auto r1 = fixtures::r1();
  Matrix px = Matrix::from_rows(r1->ambient(), {{r1->parse("x")}});
  CHECK(ideals_equal(r1, cokernel_annihilator(px, r1, {0}, {1}), {r1->parse("x")}));
  Matrix none(r1->ambient(), 1, 0);
  auto ann_free = cokernel_annihilator(none, r1, {0}, {});
  CHECK(ann_free.empty());
  // I = (y,z) over R2 presented by its syzygies.
  auto r2 = fixtures::r2();
  Matrix i = Matrix::from_rows(r2->ambient(), {{r2->parse("y"), r2->parse("z")}});
  auto rel = syzygy_basis(i, r2, {0}, {1, 1});
  Matrix pres = Matrix::from_columns(r2->ambient(), 2, rel.vectors);
  auto ann = cokernel_annihilator(pres, r2, {1, 1}, rel.degrees);
  CHECK(ideals_equal(r2, ann, {r2->parse("x")}));
}

TEST_CASE("every basis built under audit satisfies the criterion") {
  audit::enable(true);
  audit::reset();
  auto r2 = fixtures::r2();
  GroebnerBasis gb(r2, {0, 0, 0}, {mv(r2, {"x", "0", "z"}), mv(r2, {"0", "x", "-y"})});
  auto c = audit::snapshot();
  CHECK(c.bases_checked > 0);
  CHECK(c.basis_violations == 0);
  audit::enable(false);
}
