#include "doctest.h"

#include "syzygy/errors.hpp"
#include "syzygy/fixtures.hpp"
#include "syzygy/polynomial.hpp"
#include "syzygy/ring.hpp"

#include <random>

using namespace syz;

namespace {

PolyRingPtr xyz() { return make_poly_ring({"x", "y", "z"}, {1, 1, 1}); }

Polynomial random_homogeneous(const PolyRingPtr& ring, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  Polynomial p(ring);
  for (int a = 0; a <= degree; ++a)
    for (int b = 0; a + b <= degree; ++b) {
      Monomial::Exponents e{};
      e[0] = static_cast<std::uint16_t>(a);
      e[1] = static_cast<std::uint16_t>(b);
      e[2] = static_cast<std::uint16_t>(degree - a - b);
      p += Polynomial::monomial(ring, Scalar(ring->field(), coeff(rng)), ring->monomial(e));
    }
  return p;
}

}  // namespace

TEST_CASE("scalars are canonical in both fields") {
  Field p = Field::prime(7);
  CHECK(Scalar(p, -1).residue() == 6u);
  CHECK((Scalar(p, 3) * Scalar(p, 5)).residue() == 1u);
  CHECK((Scalar(p, 3) / Scalar(p, 3)).is_one());
  CHECK_THROWS_AS(Field::prime(8), Error);
  Field q = Field::rationals();
  Scalar half(q, mpq_class(2, 4));
  CHECK(half.rational() == mpq_class(1, 2));
  CHECK((half + half).is_one());
  CHECK_THROWS_AS(Scalar(p, 1) + Scalar(q, 1), RingMismatchError);
  CHECK_THROWS_AS(Scalar::zero(p).inverse(), std::domain_error);
}

TEST_CASE("field axioms on random residues") {
  Field f = Field{};
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> d(-100000, 100000);
  for (int i = 0; i < 200; ++i) {
    Scalar a(f, d(rng)), b(f, d(rng)), c(f, d(rng));
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  }
}

TEST_CASE("term order is multiplicative with 1 minimal") {
  auto ring = xyz();
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(0, 4);
  auto rand_mono = [&] {
    Monomial::Exponents x{};
    for (int i = 0; i < 3; ++i) x[i] = static_cast<std::uint16_t>(e(rng));
    return ring->monomial(x);
  };
  for (int i = 0; i < 300; ++i) {
    Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
    if (a < b) CHECK(a * c < b * c);
    CHECK(!(a < Monomial{}));
  }
  // degrevlex: x^2 > xy > y^2 > xz
  auto m = [&](int a, int b, int c) {
    Monomial::Exponents x{};
    x[0] = static_cast<std::uint16_t>(a);
    x[1] = static_cast<std::uint16_t>(b);
    x[2] = static_cast<std::uint16_t>(c);
    return ring->monomial(x);
  };
  CHECK(m(2, 0, 0) > m(1, 1, 0));
  CHECK(m(1, 1, 0) > m(0, 2, 0));
  CHECK(m(0, 2, 0) > m(1, 0, 1));
}

TEST_CASE("weighted degrees are cached") {
  auto ring = make_poly_ring({"x", "y", "z"}, {4, 5, 3});
  Polynomial p = parse_polynomial("x*z^2 - y^2", ring);
  CHECK(p.is_homogeneous());
  CHECK(p.degree() == 10);
  for (const auto& t : p.terms()) {
    int dot = 0;
    for (int i = 0; i < 3; ++i) dot += ring->weights()[i] * t.mono[i];
    CHECK(t.mono.degree() == dot);
  }
}

TEST_CASE("poly_arith examples") {
  auto ring = make_poly_ring({"x", "y"}, {1, 1});
  auto P = [&](const char* s) { return parse_polynomial(s, ring); };
  CHECK(poly_arith(ArithOp::add, P("x*y"), P("-x*y")).is_zero());
  CHECK(poly_arith(ArithOp::mul, P("x+y"), P("x-y")) == P("x^2-y^2"));
  CHECK(poly_arith(ArithOp::mul, P("x"), P("y")) == P("x*y"));
  CHECK(poly_arith(ArithOp::scalar_mul, P("x+y"), P("3")) == P("3*x+3*y"));
  auto other = make_poly_ring({"a", "b"}, {1, 1});
  CHECK_THROWS_AS(poly_arith(ArithOp::add, P("x"), parse_polynomial("a", other)), RingMismatchError);
}

TEST_CASE("ring axioms on random homogeneous triples") {
  auto ring = xyz();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    Polynomial a = random_homogeneous(ring, 2, rng);
    Polynomial b = random_homogeneous(ring, 2, rng);
    Polynomial c = random_homogeneous(ring, 1, rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + b == b + a);
    // Canonical form is idempotent.
    Polynomial again(ring, a.terms());
    CHECK(again == a);
  }
}

TEST_CASE("make_quotient_ring validates its input") {
  auto r1 = fixtures::r1();
  REQUIRE(r1->reduced_gb().size() == 1);
  CHECK(r1->reduced_gb()[0] == r1->parse("x*y"));
  auto kx = make_quotient_ring({"x"}, {1}, Field{}, {});
  CHECK(kx->reduced_gb().empty());
  CHECK_NOTHROW(fixtures::r5());
  CHECK_THROWS_AS(make_quotient_ring({"x", "y"}, {1, 1}, Field{}, {"x^2 + y"}), HomogeneityError);
  CHECK_THROWS_AS(make_quotient_ring({"x", "y"}, {1, 1}, Field{}, {"3"}), DegenerateRingError);
  CHECK_THROWS_AS(make_poly_ring({"x"}, {0}), Error);
  try {
    make_quotient_ring({"x", "y"}, {1, 1}, Field{}, {"x^2 + y"});
  } catch (const HomogeneityError& e) {
    CHECK(std::string(e.what()).find("term y") != std::string::npos);
  }
}

TEST_CASE("reduced basis of the weighted determinantal ideal is autoreduced and monic") {
  auto r5 = fixtures::r5();
  const auto& gb = r5->reduced_gb();
  REQUIRE(!gb.empty());
  for (std::size_t i = 0; i < gb.size(); ++i) {
    CHECK(gb[i].leading_term().coeff.is_one());
    for (std::size_t j = 0; j < gb.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : gb[j].terms()) CHECK(!gb[i].leading_term().mono.divides(t.mono));
    }
  }
  // Same ideal as the generators.
  for (const auto& g : r5->generators()) CHECK(r5->is_zero(g));
}

TEST_CASE("parser round trip") {
  auto r = fixtures::r2();
  Polynomial p = r->parse("(x+y)^2 - 2*x*y + 3z");
  CHECK(p == r->parse("x^2 + y^2 + 3*z"));
  CHECK(parse_polynomial(p.to_string(), r->ambient()) == p);
  CHECK_THROWS_AS(r->parse("x + w"), Error);
}
