#pragma once

#include "syzygy/homalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace syz {

inline constexpr std::size_t kDefaultTrials = 64;
inline constexpr std::uint64_t kDefaultSeed = 1;

/// Three-valued answers. not_found is never a disproof.
enum class Verdict { proved_yes, proved_no, not_found };
std::string to_string(Verdict v);

/// Maps f: M -> N and g: N -> M whose composite is an automorphism of M.
/// f and g may mix graded components. The composite's constant part (its
/// action on M / mM) is invertible, so by Nakayama g o f is surjective, hence
/// bijective, and M is a direct summand of N after localizing at the
/// homogeneous maximal ideal. When both maps have degree 0 the cokernel of
/// g o f is also shown to vanish by a Groebner computation.
struct SplitCertificate {
  ModuleHom f;
  ModuleHom g;
  Matrix composite;
  DenseMatrix composite_constant_part;
  /// Degrees of the graded components used in f and in g.
  std::vector<int> f_degrees;
  std::vector<int> g_degrees;
  bool graded = false;

  /// Recomputes everything from f and g.
  bool verify() const;
};

struct SplitReport {
  Verdict verdict = Verdict::not_found;
  std::optional<SplitCertificate> certificate;
  std::string obstruction;
  std::vector<std::string> diagnostics;
  std::uint64_t seed = kDefaultSeed;
  std::size_t trials_used = 0;
};

/// Is M a direct summand of N?
SplitReport split_summand(const FPModule& m, const FPModule& n, std::size_t trials = kDefaultTrials,
                          std::uint64_t seed = kDefaultSeed);

/// M = A + B via mutually inverse degree-0 maps M -> A+B -> M.
struct DecompositionCertificate {
  FPModule module;
  FPModule first;
  FPModule second;
  ModuleHom to_sum;
  ModuleHom from_sum;

  FPModule sum() const { return direct_sum(first, second); }
  bool verify() const;
};

struct DecomposeReport {
  /// proved_yes: decomposed; proved_no: indecomposable.
  Verdict verdict = Verdict::not_found;
  std::optional<DecompositionCertificate> certificate;
  std::string reason;
  std::size_t endomorphism_dimension = 0;
  std::uint64_t seed = kDefaultSeed;
};

DecomposeReport decompose(const FPModule& m, std::size_t trials = kDefaultTrials, std::uint64_t seed = kDefaultSeed);
/// decompose on the maximal ideal, answering indecomposable outright when
/// depth R >= 2 (a decomposable maximal ideal forces depth <= 1).
DecomposeReport decompose_maximal_ideal(const QuotientRingPtr& ring, std::size_t trials = kDefaultTrials,
                                        std::uint64_t seed = kDefaultSeed);

/// Decomposition of the submodule spanned by a + b when the sum is direct;
/// nullopt when the projection onto the a-part is not well defined.
std::optional<DecompositionCertificate> internal_direct_sum(const QuotientRingPtr& ring,
                                                            const std::vector<int>& shifts,
                                                            const std::vector<ModuleVector>& a,
                                                            const std::vector<ModuleVector>& b);

/// Presentation of the submodule spanned by `vectors`, keeping every vector
/// as a generator.
FPModule module_on_generators(const QuotientRingPtr& ring, const std::vector<int>& shifts,
                              const std::vector<ModuleVector>& vectors);

struct IsomorphismReport {
  Verdict verdict = Verdict::not_found;
  /// M -> N split injection; with nu(M) = nu(N) it is an isomorphism.
  std::optional<SplitCertificate> certificate;
  std::string reason;
  std::uint64_t seed = kDefaultSeed;
};

IsomorphismReport is_isomorphic(const FPModule& m, const FPModule& n, std::size_t trials = kDefaultTrials,
                                std::uint64_t seed = kDefaultSeed);

struct FiberProduct {
  QuotientRingPtr ring;
  /// Maximal ideal = (variables of the first factor) + (those of the second).
  DecompositionCertificate decomposition;
};

/// k[vars S, vars T] / (I_S + I_T + products of a variable from each side).
FiberProduct fiber_product(const QuotientRingPtr& s, const QuotientRingPtr& t, const std::string& label = {});

/// All 2x2 minors of a 2 x m matrix, columns (i, j) with i < j.
std::vector<Polynomial> determinantal_ideal_2x2(const Matrix& m);

/// nu of the maximal ideal.
std::size_t embedding_dimension(const QuotientRingPtr& ring);
/// Embedding dimension 1 and dimension 1.
bool is_dvr(const QuotientRingPtr& ring);

struct MultiplicityReport {
  long long multiplicity = 0;
  std::size_t embedding_dimension = 0;
  int dimension = 0;
  bool holds = false;
  bool cohen_macaulay = false;
  std::string note;
};

/// e(R) = edim R - dim R + 1. Standard grading only.
MultiplicityReport minimal_multiplicity(const QuotientRingPtr& ring);

struct QuasiDecomposableReport {
  Verdict verdict = Verdict::not_found;
  RegularSequenceReport regular;
  QuotientRingPtr quotient;
  std::optional<DecompositionCertificate> decomposition;
  std::size_t ring_depth = 0;
  /// Sequence length is depth R - 1 or depth R.
  bool length_constraint_holds = false;
  std::string reason;
};

QuasiDecomposableReport quasi_decomposable(const QuotientRingPtr& ring, const std::vector<Polynomial>& x,
                                           std::size_t trials = kDefaultTrials, std::uint64_t seed = kDefaultSeed);

/// Constant terms of a polynomial matrix.
DenseMatrix constant_part(const Matrix& m, const Field& field);

}  // namespace syz
