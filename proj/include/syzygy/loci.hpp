#pragma once

#include "syzygy/homalg.hpp"

#include <string>
#include <vector>

namespace syz {

inline constexpr unsigned kRadicalProbeExponent = 8;

enum class LocusKind { singular, non_free, ipd };
std::string to_string(LocusKind k);

/// The closed set V(J) of Spec R, kept as its defining ideal J.
struct LocusDescription {
  LocusKind kind = LocusKind::singular;
  QuotientRingPtr ring;
  std::vector<Polynomial> defining_ideal;
  /// Assumptions the answer depends on that were not verified.
  std::vector<std::string> validity_flags;

  bool is_empty() const;
  /// V(J) is the homogeneous maximal ideal alone. Bounded radical probe.
  bool is_closed_point() const;
  std::string describe() const;
};

/// f^e in J for some e <= max_exponent.
bool radical_contains(const QuotientRingPtr& ring, const std::vector<Polynomial>& ideal, const Polynomial& f,
                      unsigned max_exponent = kRadicalProbeExponent);
/// V(a) contained in V(b), that is b inside rad(a). Bounded.
bool locus_within(const LocusDescription& a, const LocusDescription& b);
bool same_locus(const LocusDescription& a, const LocusDescription& b);

/// Determinant by cofactor expansion.
Polynomial determinant(const Matrix& m);
/// All c x c minors.
std::vector<Polynomial> minors(const Matrix& m, std::size_t c);
/// Rows: ring generators, columns: variables.
Matrix jacobian(const QuotientRing& ring);

/// V(I + c x c minors of the Jacobian), c the codimension of I.
LocusDescription singular_locus(const QuotientRingPtr& ring, std::size_t codim);
/// V(ann Ext^1(M, syzygy(M, 1))).
LocusDescription non_free_locus(const FPModule& m);
/// non_free_locus(syzygy(M, d)) for R Cohen-Macaulay of dimension d.
LocusDescription ipd_locus(const FPModule& m, std::size_t d);

}  // namespace syz
