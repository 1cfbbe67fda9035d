#include "doctest.h"

#include "oracles.hpp"
#include "syzygy/audit.hpp"
#include "syzygy/fixtures.hpp"
#include "syzygy/resolution.hpp"

using namespace syz;

TEST_CASE("free modules resolve trivially") {
  auto r1 = fixtures::r1();
  MinimalResolution res = free_resolution(FPModule::free(r1, {0, 1, 1}), 3);
  CHECK(res.terminated());
  CHECK(res.betti() == std::vector<std::size_t>{3, 0, 0, 0});
}

TEST_CASE("displayed resolution of R/(y) over k[x,y,z]/(xy,xz)") {
  auto r2 = fixtures::r2();
  FPModule m = FPModule::cyclic(r2, {r2->parse("y")});
  MinimalResolution res = free_resolution(m, 5);
  CHECK(res.betti() == std::vector<std::size_t>{1, 1, 1, 2, 3, 5});
  CHECK(res.verify());
  BettiTable oracle = truncated_linear_resolution(m, 5, 8);
  CHECK(truncate_table(res.graded_betti(), 5, 8) == truncate_table(oracle, 5, 8));
}

TEST_CASE("residue field over k[x,y]/(xy)") {
  auto r1 = fixtures::r1();
  FPModule k = FPModule::residue_field(r1);
  MinimalResolution res = free_resolution(k, 6);
  CHECK(res.betti() == std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 2});
  BettiTable oracle = truncated_linear_resolution(k, 6, 8);
  std::vector<std::size_t> totals;
  for (const auto& row : oracle) {
    std::size_t s = 0;
    for (const auto& [d, n] : row) s += n;
    totals.push_back(s);
  }
  CHECK(totals == std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 2});
}

TEST_CASE("resolution cache extends prefixes") {
  auto r2 = fixtures::r2();
  FPModule k = FPModule::residue_field(r2);
  MinimalResolution a = free_resolution(k, 3);
  MinimalResolution b = free_resolution(k, 5);
  MinimalResolution c = free_resolution(k, 2);
  CHECK(b.betti() == std::vector<std::size_t>{1, 3, 5, 8, 13, 21});
  for (std::size_t i = 1; i <= 3; ++i) CHECK(a.matrix(i) == b.matrix(i));
  CHECK(c.betti() == std::vector<std::size_t>{1, 3, 5});
}

TEST_CASE("syzygy modules") {
  auto r1 = fixtures::r1();
  FPModule m = FPModule::cyclic(r1, {r1->parse("x")});
  FPModule o1 = syzygy(m, 1);
  CHECK(o1.num_generators() == 1);
  CHECK(ideals_equal(r1, annihilator(o1), {r1->parse("y")}));
  CHECK(hilbert_function(o1, 0, 5) == oracle::hilbert_function(o1, 0, 5));

  auto r3 = fixtures::r3();
  FPModule n = FPModule::cyclic(r3, {r3->parse("y")});
  FPModule o3 = syzygy(n, 3);
  CHECK(o3.num_generators() == 2);
  CHECK(hilbert_function(twist(o3, 0), 0, 6) ==
        hilbert_function(direct_sum(FPModule::residue_field(r3), FPModule::cyclic(r3, {r3->parse("x")})), -3, 3));

  auto r2 = fixtures::r2();
  FPModule y = FPModule::cyclic(r2, {r2->parse("y")});
  FPModule o5 = syzygy(y, 5);
  CHECK(o5.num_generators() == 5);
  for (std::size_t i = 0; i <= 5; ++i) CHECK(minimal_number_of_generators(syzygy(y, i)) == free_resolution(y, 5).betti()[i]);
}

TEST_CASE("Koszul complexes") {
  auto r4 = fixtures::r4();
  KoszulComplex kt = koszul_complex({r4->parse("t")}, FPModule::free(r4, {0}));
  CHECK(kt.verify());
  CHECK(kt.homology(1).is_zero());
  CHECK(hilbert_function(kt.homology(0), 0, 5) ==
        hilbert_function(FPModule::cyclic(r4, {r4->parse("t")}), 0, 5));

  auto r1 = fixtures::r1();
  KoszulComplex kx = koszul_complex({r1->parse("x")}, FPModule::free(r1, {0}));
  FPModule h1 = kx.homology(1);
  CHECK(!h1.is_zero());
  CHECK(hilbert_function(h1, 0, 5) == hilbert_function(twist(FPModule::from_ideal(r1, {r1->parse("y")}), -1), 0, 5));

  auto kxy = fixtures::polynomial_ring({"x", "y"});
  KoszulComplex kk = koszul_complex({kxy->parse("x"), kxy->parse("y")}, FPModule::free(kxy, {0}));
  CHECK(kk.verify());
  CHECK(kk.term(1).num_generators() == 2);
  CHECK(kk.homology(1).is_zero());
  CHECK(kk.homology(2).is_zero());
  CHECK(hilbert_function(kk.homology(0), 0, 3) == std::vector<long long>{1, 0, 0, 0});
}

TEST_CASE("linear oracle agrees on small cases") {
  auto kx = fixtures::polynomial_ring({"x"});
  BettiTable t = truncated_linear_resolution(FPModule::free(kx, {0, 2}), 3, 5);
  CHECK(t[0].at(0) == 1);
  CHECK(t[0].at(2) == 1);
  CHECK(t[1].empty());
  auto r5 = fixtures::r5();
  FPModule k5 = FPModule::residue_field(r5);
  CHECK(truncate_table(free_resolution(k5, 3).graded_betti(), 3, 12) ==
        truncate_table(truncated_linear_resolution(k5, 3, 12), 3, 12));
}

TEST_CASE("resolutions pass the audit and Omega is additive") {
  audit::enable(true);
  audit::reset();
  auto r3 = fixtures::r3();
  FPModule a = FPModule::cyclic(r3, {r3->parse("y")});
  FPModule b = FPModule::residue_field(r3);
  auto ra = free_resolution(a, 4), rb = free_resolution(b, 4), rs = free_resolution(direct_sum(a, b), 4);
  for (std::size_t i = 0; i <= 4; ++i) {
    auto ta = ra.graded_betti()[i], tb = rb.graded_betti()[i];
    for (const auto& [d, n] : tb) ta[d] += n;
    CHECK(rs.graded_betti()[i] == ta);
  }
  auto c = audit::snapshot();
  CHECK(c.resolutions_checked >= 3);
  CHECK(c.resolution_violations == 0);
  CHECK(c.basis_violations == 0);
  audit::enable(false);
}
