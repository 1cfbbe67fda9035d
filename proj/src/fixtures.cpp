#include "syzygy/fixtures.hpp"

#include "syzygy/errors.hpp"

namespace syz::fixtures {

QuotientRingPtr r1(Field f) { return make_quotient_ring({"x", "y"}, {1, 1}, f, {"x*y"}, "R1"); }

QuotientRingPtr r2(Field f) {
  return make_quotient_ring({"x", "y", "z"}, {1, 1, 1}, f, {"x*y", "x*z"}, "R2");
}

QuotientRingPtr r3(Field f) { return make_quotient_ring({"x", "y"}, {1, 1}, f, {"x^2", "x*y"}, "R3"); }

QuotientRingPtr r4(Field f) { return make_quotient_ring({"x", "y", "t"}, {1, 1, 1}, f, {"x*y"}, "R4"); }

QuotientRingPtr r5(Field f) {
  return make_quotient_ring({"x", "y", "z"}, {4, 5, 3}, f, {"x*z^2 - y^2", "x^2 - y*z", "x*y - z^3"}, "R5");
}

QuotientRingPtr polynomial_ring(const std::vector<std::string>& vars, Field f) {
  return make_quotient_ring(vars, std::vector<int>(vars.size(), 1), f, {});
}

QuotientRingPtr by_name(const std::string& name, Field f) {
  if (name == "R1") return r1(f);
  if (name == "R2") return r2(f);
  if (name == "R3") return r3(f);
  if (name == "R4") return r4(f);
  if (name == "R5") return r5(f);
  throw Error("unknown bundled ring " + name);
}

}  // namespace syz::fixtures
