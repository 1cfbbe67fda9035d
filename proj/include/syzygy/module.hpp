#pragma once

#include "syzygy/groebner.hpp"
#include "syzygy/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace syz {

class MinimalResolution;

/// Graded free module R(-s_1) + ... + R(-s_r).
struct FreeModule {
  QuotientRingPtr ring;
  std::vector<int> shifts;
  std::size_t rank() const { return shifts.size(); }
};

/// Degree-0 map between free modules, one column per source generator.
struct ModuleMap {
  FreeModule source;
  FreeModule target;
  Matrix matrix;

  /// Throws ShapeError / HomogeneityError when the data is inconsistent.
  void validate() const;
};

namespace detail {
struct ModuleCache {
  std::mutex mutex;
  std::shared_ptr<const GroebnerBasis> relation_basis;
  std::shared_ptr<const MinimalResolution> resolution;
};
}  // namespace detail

/// Finitely presented graded module coker(F_1 -> F_0). Immutable; copies
/// share a lazily filled cache (relation Groebner basis, resolution).
class FPModule {
 public:
  FPModule(QuotientRingPtr ring, Matrix presentation, std::vector<int> generator_shifts,
           std::vector<int> relation_shifts);
  /// Relation shifts inferred from the columns (zero columns are dropped).
  FPModule(QuotientRingPtr ring, Matrix presentation, std::vector<int> generator_shifts);

  static FPModule free(const QuotientRingPtr& ring, std::vector<int> shifts);
  static FPModule zero(const QuotientRingPtr& ring);
  /// R / J.
  static FPModule cyclic(const QuotientRingPtr& ring, const std::vector<Polynomial>& ideal);
  static FPModule residue_field(const QuotientRingPtr& ring);
  /// The ideal J as a module, generated by a minimal generating set of J.
  static FPModule from_ideal(const QuotientRingPtr& ring, const std::vector<Polynomial>& ideal);
  static FPModule maximal_ideal(const QuotientRingPtr& ring);
  /// Submodule of the free module with the given shifts spanned by `vectors`.
  static FPModule image(const QuotientRingPtr& ring, const std::vector<int>& shifts,
                        const std::vector<ModuleVector>& vectors);

  const QuotientRingPtr& ring() const { return ring_; }
  const Matrix& presentation() const { return presentation_; }
  const std::vector<int>& generator_shifts() const { return generator_shifts_; }
  const std::vector<int>& relation_shifts() const { return relation_shifts_; }
  std::size_t num_generators() const { return generator_shifts_.size(); }
  std::size_t num_relations() const { return relation_shifts_.size(); }
  FreeModule generators_free() const { return {ring_, generator_shifts_}; }
  ModuleMap presentation_map() const;

  /// True when no presentation entry is a unit, so num_generators() = nu(M).
  bool is_minimal() const { return minimal_; }

  /// Groebner basis of (relations + I F_0) in F_0.
  const GroebnerBasis& relation_basis() const;
  ModuleVector normal_form(const ModuleVector& v) const;
  bool is_zero_element(const ModuleVector& v) const;
  bool is_zero() const;

  std::string to_text(const std::string& name, const std::string& ring_name) const;
  std::shared_ptr<detail::ModuleCache> cache() const { return cache_; }

 private:
  QuotientRingPtr ring_;
  Matrix presentation_;
  std::vector<int> generator_shifts_;
  std::vector<int> relation_shifts_;
  bool minimal_ = false;
  std::shared_ptr<detail::ModuleCache> cache_;
};

/// A homomorphism M -> N given by the images of M's generators: column j is
/// the image of generator j in N's generator coordinates. Not necessarily
/// homogeneous (sums of graded components are allowed).
struct ModuleHom {
  FPModule source;
  FPModule target;
  Matrix matrix;

  /// Relations of the source map into relations of the target.
  bool is_well_defined() const;
  ModuleHom compose_after(const ModuleHom& first) const;  // this o first
  static ModuleHom identity(const FPModule& m);
  /// Zero map.
  static ModuleHom zero(const FPModule& m, const FPModule& n);
};

FPModule minimal_presentation(const FPModule& m);
FPModule direct_sum(const FPModule& a, const FPModule& b);
FPModule direct_sum(const std::vector<FPModule>& parts, const QuotientRingPtr& ring);
/// R^r shifted so that M(d)_t = M_{d+t}: generator shifts drop by d.
FPModule twist(const FPModule& m, int d);

/// ker(d_out) / im(d_in) for a complex A -> B -> C of presented modules.
FPModule homology(const ModuleHom& d_in, const ModuleHom& d_out);
FPModule kernel(const ModuleHom& f);
/// Vectors of the source's free module generating ker f, each nonzero in the
/// source module.
GradedGenerators kernel_generators(const ModuleHom& f);
FPModule cokernel(const ModuleHom& f);

/// Degree-d homomorphisms M -> N(d) as a k-vector space.
struct HomSpace {
  FPModule source;
  FPModule target;
  int degree = 0;
  std::vector<Matrix> basis;
  std::size_t dimension() const { return basis.size(); }
  /// Well-definedness of basis element i.
  bool certify(std::size_t i) const;
};

HomSpace hom_component(const FPModule& m, const FPModule& n, int degree);
HomSpace hom_space(const FPModule& m, const FPModule& n);

/// k-basis of the degree-t part of M as standard vectors (monomial times
/// generator) not in the initial module of the relations.
std::vector<ModuleVector> graded_basis(const FPModule& m, int t);
/// Coordinates of an element of M_t in the basis returned by graded_basis.
std::vector<Scalar> graded_coordinates(const FPModule& m, int t, const ModuleVector& v);

enum class HilbertMode { function_up_to, series, dimension, multiplicity };

struct HilbertReport {
  HilbertMode mode = HilbertMode::function_up_to;
  /// Hilbert function values for degrees first_degree .. degree_bound.
  int first_degree = 0;
  int degree_bound = 0;
  std::vector<long long> function;
  /// Numerator of the Hilbert series over (1-t)^n, coefficient of t^(offset+i).
  int numerator_offset = 0;
  std::vector<long long> numerator;
  int dimension = -1;
  long long multiplicity = 0;
};

inline constexpr int kDefaultHilbertBound = 12;

HilbertReport hilbert(const FPModule& m, HilbertMode mode, int degree_bound = kDefaultHilbertBound);
std::vector<long long> hilbert_function(const FPModule& m, int from, int to);
/// Krull dimension by the monomial criterion; -1 for the zero module. Valid
/// for every grading.
int krull_dimension(const FPModule& m);
int krull_dimension(const QuotientRingPtr& ring);
/// Total k-dimension when finite, else nullopt.
std::optional<long long> finite_length(const FPModule& m);

FPModule auslander_transpose(const FPModule& m);
/// (0 :_R M).
std::vector<Polynomial> annihilator(const FPModule& m);

/// Minimal presentation has no relations.
bool is_free(const FPModule& m);
/// nu(M).
std::size_t minimal_number_of_generators(const FPModule& m);

/// M / J M.
FPModule quotient_module(const FPModule& m, const std::vector<Polynomial>& ideal);

std::vector<Monomial> monomials_of_degree(const PolyRing& ring, int degree);

}  // namespace syz
