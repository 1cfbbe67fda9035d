#pragma once

#include "syzygy/ring.hpp"

namespace syz::fixtures {

/// k[x,y]/(xy)
QuotientRingPtr r1(Field f = Field{});
/// k[x,y,z]/(xy,xz)
QuotientRingPtr r2(Field f = Field{});
/// k[x,y]/(x^2,xy)
QuotientRingPtr r3(Field f = Field{});
/// k[x,y,t]/(xy)
QuotientRingPtr r4(Field f = Field{});
/// k[x,y,z]/(xz^2-y^2, x^2-yz, xy-z^3), weights (4,5,3): the 2x2 minors of
/// ((x,y,z),(y,z^2,x)).
QuotientRingPtr r5(Field f = Field{});

/// Polynomial ring k[vars] with standard weights.
QuotientRingPtr polynomial_ring(const std::vector<std::string>& vars, Field f = Field{});

/// The bundled rings by name ("R1".."R5").
QuotientRingPtr by_name(const std::string& name, Field f = Field{});

}  // namespace syz::fixtures
