#include "doctest.h"

#include "syzygy/errors.hpp"
#include "syzygy/fixtures.hpp"
#include "syzygy/resolution.hpp"
#include "syzygy/textformat.hpp"

using namespace syz;

TEST_CASE("reading rings, modules and ideals") {
  const std::string text = R"(# two components meeting at a point
ring R = GF(32003)[x,y,z] weights [1,1,1] mod [x*y, x*z]
module M over R = coker [[y]]
module T over R = coker [[x, 0], [0, x], [z, -y]] shifts [0,0,0]
ideal I over R = [y, z]   # trailing comment
ring S = k[a,b] weights [3,2] mod [a^2 - b^3]
ring W = QQ[u,v] weights [2,3]
)";
  Document d = parse_document(text);
  REQUIRE(d.rings.size() == 3);
  CHECK(d.order == std::vector<std::string>{"R", "M", "T", "I", "S", "W"});
  CHECK(d.ring("R")->same_as(*fixtures::r2()));
  CHECK(free_resolution(d.module("M"), 5).betti() == std::vector<std::size_t>{1, 1, 1, 2, 3, 5});
  CHECK(d.module("T").num_generators() == 3);
  CHECK(d.ideal("I").size() == 2);
  CHECK(d.ring_of("I") == d.ring("R"));
  CHECK(d.ring("W")->field() == Field::rationals());
  CHECK(d.ring("W")->weights() == std::vector<int>{2, 3});
  CHECK(d.ring("S")->generators().size() == 1);
  CHECK_THROWS_AS(d.module("X"), Error);
}

TEST_CASE("field overrides") {
  ParseOptions o;
  o.default_field = Field::prime(101);
  Document d = parse_document("ring R = k[x]\nring S = GF(7)[y]\n", o);
  CHECK(d.ring("R")->field() == Field::prime(101));
  CHECK(d.ring("S")->field() == Field::prime(7));
  o.force_field = Field::rationals();
  Document e = parse_document("ring S = GF(7)[y]\n", o);
  CHECK(e.ring("S")->field() == Field::rationals());
  CHECK(parse_field("GF( 5 )") == Field::prime(5));
  CHECK_THROWS_AS(parse_field("GF(6)"), Error);
}

TEST_CASE("round trip through the text form") {
  auto r = fixtures::r5();
  FPModule m = FPModule::maximal_ideal(r);
  std::string text = r->to_text("R") + "\n" + m.to_text("M", "R") + "\n";
  Document d = parse_document(text);
  CHECK(d.ring("R")->same_as(*r));
  const FPModule& back = d.module("M");
  CHECK(back.generator_shifts() == m.generator_shifts());
  CHECK(free_resolution(back, 3).graded_betti() == free_resolution(m, 3).graded_betti());

  Document f = parse_document("ring R = k[x,y] mod [x*y]\nmodule F over R = coker [[], []] shifts [0, 2]\n");
  CHECK(is_free(f.module("F")));
  CHECK(f.module("F").generator_shifts() == std::vector<int>{0, 2});
}

TEST_CASE("errors carry the line") {
  auto line_of = [](const std::string& text) {
    try {
      parse_document(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("ring R = k[x,y]\nmodule M over Q = coker [[x]]\n") == 2);
  CHECK(line_of("ring R = k[x,y]\n\n# note\nmodule M over R = coker [[x], [y, x]]\n") == 4);
  CHECK(line_of("ring R = k[x,y] weights [1]\n") == 1);
  CHECK(line_of("ring R = k[x,y] mod [x + y^2]\n") == 1);
  CHECK(line_of("ring R = k[x,y]\nideal I over R = [x +* y]\n") == 2);
  CHECK(line_of("ring R = k[x,y]\nring R = k[z]\n") == 2);
  CHECK(line_of("field F = GF(7)\n") == 1);
  CHECK(line_of("ring R = k[x,y]\nmodule M over R = coker [[x]] shifts [0, 1]\n") == 2);
  CHECK(line_of("ring R = k[x,y] banana\n") == 1);
  CHECK(line_of("ring R = k[x]\nideal I over R = [x + 1]\n") == 2);
}
