#pragma once

#include "syzygy/polynomial.hpp"

#include <climits>
#include <cstdint>
#include <vector>

namespace syz::detail {

/// One term of a vector in a free module over the ambient ring.
struct ModTerm {
  Scalar coeff;
  Monomial mono;
  std::uint32_t comp = 0;
};

/// Sparse module vector, terms strictly descending in position-over-term
/// order: a lower component index ranks higher, then the ring's term order.
using ModPoly = std::vector<ModTerm>;

inline bool pot_greater(const ModTerm& a, const ModTerm& b) {
  if (a.comp != b.comp) return a.comp < b.comp;
  return a.mono > b.mono;
}

/// a + c * m * b (b's components shifted by `comp_offset`).
ModPoly add_multiple(const ModPoly& a, const Scalar& c, const Monomial& m, const ModPoly& b);
ModPoly normalize(ModPoly v);
ModPoly make_monic(ModPoly v);
bool single_component(const ModPoly& v);

/// Coordinates -> sparse vector, placing coordinate i in component offset + i.
ModPoly to_modpoly(const std::vector<Polynomial>& v, std::uint32_t offset = 0);
/// Sparse vector -> coordinates [offset, offset + rank); other components ignored.
std::vector<Polynomial> from_modpoly(const PolyRingPtr& ring, const ModPoly& v, std::size_t rank,
                                     std::uint32_t offset = 0);

/// Incremental Buchberger engine for submodules of a graded free module
/// A^r over the ambient ring, with the normal selection strategy and the
/// Gebauer-Moeller pair criteria. `complete(d)` processes every pending pair
/// and generator of degree <= d, so truncated bases are exact up to d.
class GbEngine {
 public:
  GbEngine(PolyRingPtr ring, std::vector<int> shifts);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<int>& shifts() const { return shifts_; }
  int degree(const ModPoly& v) const;

  void add_generator(ModPoly v);
  void complete(int degree_bound = INT_MAX);
  bool has_pending(int degree_bound = INT_MAX) const;

  /// Full normal form against the current basis.
  ModPoly reduce(ModPoly v) const;
  /// Minimal, tail-reduced, monic basis in insertion order.
  std::vector<ModPoly> reduced_basis() const;
  /// Leading terms of the current minimal basis, grouped by component.
  std::vector<std::vector<Monomial>> leading_monomials() const;

  std::size_t pairs_processed() const { return pairs_processed_; }

  friend bool satisfies_buchberger_criterion(const PolyRingPtr& ring,
                                             const std::vector<int>& shifts,
                                             const std::vector<ModPoly>& basis);

 private:
  struct Pair {
    int degree;
    std::size_t i, j;
    Monomial lcm;
  };
  struct Pending {
    int degree;
    std::size_t seq;
    ModPoly v;
  };

  void insert(ModPoly h);
  ModPoly s_vector(const Pair& p) const;
  const ModPoly* find_reducer(const ModTerm& t) const;

  PolyRingPtr ring_;
  std::vector<int> shifts_;
  std::vector<ModPoly> elements_;
  std::vector<bool> single_comp_;
  std::vector<std::vector<std::size_t>> active_by_comp_;
  std::vector<Pair> pairs_;
  std::vector<Pending> pending_;
  std::size_t seq_ = 0;
  std::size_t pairs_processed_ = 0;
};

/// True when every S-vector of the basis reduces to zero against it.
bool satisfies_buchberger_criterion(const PolyRingPtr& ring, const std::vector<int>& shifts,
                                    const std::vector<ModPoly>& basis);

}  // namespace syz::detail
