#pragma once

#include "syzygy/matrix.hpp"
#include "syzygy/ring.hpp"

#include <climits>
#include <memory>
#include <optional>
#include <vector>

namespace syz {

namespace detail {
class GbEngine;
}

/// Element of a graded free module R^r, one polynomial per coordinate.
using ModuleVector = std::vector<Polynomial>;

/// Weighted degree of a homogeneous vector given the coordinate shifts, or
/// nullopt for the zero vector.
std::optional<int> vector_degree(const ModuleVector& v, const std::vector<int>& shifts);
bool is_homogeneous_vector(const ModuleVector& v, const std::vector<int>& shifts);

/// Groebner basis of U + I R^r inside the ambient free module, where U is
/// spanned by the given generators and I is the ring's defining ideal.
class GroebnerBasis {
 public:
  GroebnerBasis(QuotientRingPtr ring, std::vector<int> shifts, const std::vector<ModuleVector>& generators,
                int degree_bound = INT_MAX);

  const QuotientRingPtr& ring() const { return ring_; }
  const std::vector<int>& shifts() const { return shifts_; }
  std::size_t rank() const { return shifts_.size(); }
  /// INT_MAX when the basis is complete.
  int degree_bound() const { return degree_bound_; }

  const std::vector<ModuleVector>& elements() const { return elements_; }
  /// Leading monomials per coordinate.
  std::vector<std::vector<Monomial>> leading_monomials() const;

  ModuleVector normal_form(const ModuleVector& v) const;
  bool contains(const ModuleVector& v) const;
  /// Every S-vector of the elements reduces to zero against them.
  bool verify() const;
  std::size_t pairs_processed() const;

 private:
  QuotientRingPtr ring_;
  std::vector<int> shifts_;
  int degree_bound_;
  std::shared_ptr<detail::GbEngine> engine_;
  std::vector<ModuleVector> elements_;
};

GroebnerBasis buchberger(const std::vector<ModuleVector>& generators, const QuotientRingPtr& ring,
                         std::vector<int> shifts = {});
ModuleVector normal_form(const ModuleVector& v, const GroebnerBasis& gb);

/// Generators of a graded submodule together with their degrees.
struct GradedGenerators {
  std::vector<ModuleVector> vectors;
  std::vector<int> degrees;
  std::size_t size() const { return vectors.size(); }
};

/// Minimal generating subset over R: candidates are scanned by degree, then by
/// smallest leading term, and kept when not in the span of those kept so far.
GradedGenerators minimal_generators(const QuotientRingPtr& ring, const std::vector<int>& shifts,
                                    std::vector<ModuleVector> candidates);

/// Kernel of the degree-0 map R^s(-source_shifts) -> R^r(-target_shifts)
/// whose columns are the columns of m. Generators are minimal unless
/// `minimize` is false; with a finite `degree_bound` only generators of degree
/// at most the bound are produced.
GradedGenerators syzygy_basis(const Matrix& m, const QuotientRingPtr& ring,
                              const std::vector<int>& target_shifts,
                              const std::vector<int>& source_shifts, bool minimize = true,
                              int degree_bound = INT_MAX);

/// Shifts of the columns of m inferred from their entries; zero columns get
/// `fallback`.
std::vector<int> column_degrees(const Matrix& m, const std::vector<int>& target_shifts, int fallback = 0);

/// (0 :_R coker m) for a presentation m with the given shifts.
std::vector<Polynomial> cokernel_annihilator(const Matrix& m, const QuotientRingPtr& ring,
                                             const std::vector<int>& target_shifts,
                                             const std::vector<int>& source_shifts);

// Ideal helpers; ideals are generator lists in R.
bool ideal_contains(const QuotientRingPtr& ring, const std::vector<Polynomial>& ideal, const Polynomial& f);
/// Same ideal of R.
bool ideals_equal(const QuotientRingPtr& ring, const std::vector<Polynomial>& a,
                  const std::vector<Polynomial>& b);
/// Minimal homogeneous generators of the ideal, nonzero in R.
std::vector<Polynomial> minimize_ideal(const QuotientRingPtr& ring, const std::vector<Polynomial>& ideal);
/// (J : f) in R.
std::vector<Polynomial> ideal_quotient(const QuotientRingPtr& ring, const std::vector<Polynomial>& ideal,
                                       const Polynomial& f);
std::vector<Polynomial> ideal_intersection(const QuotientRingPtr& ring, const std::vector<Polynomial>& a,
                                           const std::vector<Polynomial>& b);
/// True when J is the whole ring.
bool is_unit_ideal(const QuotientRingPtr& ring, const std::vector<Polynomial>& ideal);

}  // namespace syz
