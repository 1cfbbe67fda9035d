#pragma once

#include "syzygy/module.hpp"

#include <map>
#include <vector>

namespace syz {

/// beta_{i,j}: row i is homological degree, keyed by internal degree j.
using BettiTable = std::vector<std::map<int, std::size_t>>;

/// F_0 <- F_1 <- ... <- F_L with every differential entry in the maximal ideal.
class MinimalResolution {
 public:
  MinimalResolution(FPModule module, std::vector<FreeModule> free_modules, std::vector<Matrix> differentials,
                    bool terminated);

  /// The minimally presented module being resolved.
  const FPModule& module() const { return module_; }
  /// Number of differentials computed (the length requested).
  std::size_t length() const { return differentials_.size(); }
  const FreeModule& free_module(std::size_t i) const { return free_modules_.at(i); }
  /// d_i : F_i -> F_{i-1}, for 1 <= i <= length().
  ModuleMap differential(std::size_t i) const;
  const Matrix& matrix(std::size_t i) const { return differentials_.at(i - 1); }
  /// True when some F_i vanished, so the resolution is finite.
  bool terminated() const { return terminated_; }

  std::vector<std::size_t> betti() const;
  BettiTable graded_betti() const;

  /// d_i d_{i+1} = 0 in R and no unit entries.
  bool verify() const;
  /// Prefix of length L.
  MinimalResolution truncated(std::size_t length) const;

 private:
  FPModule module_;
  std::vector<FreeModule> free_modules_;  // F_0 .. F_L
  std::vector<Matrix> differentials_;     // d_1 .. d_L
  bool terminated_;
};

inline constexpr std::size_t kDefaultResolutionLength = 6;

MinimalResolution free_resolution(const FPModule& m, std::size_t length = kDefaultResolutionLength);

/// Omega^i M: the minimal presentation for i = 0, coker d_{i+1} otherwise.
FPModule syzygy(const FPModule& m, std::size_t i);

/// K(x; M) with the standard exterior-algebra signs.
class KoszulComplex {
 public:
  KoszulComplex(std::vector<Polynomial> sequence, FPModule module);

  const std::vector<Polynomial>& sequence() const { return sequence_; }
  std::size_t length() const { return sequence_.size(); }
  /// K_i as a direct sum of binomial(n, i) shifted copies of M.
  const FPModule& term(std::size_t i) const { return terms_.at(i); }
  /// d_i : K_i -> K_{i-1}, 1 <= i <= n.
  const ModuleHom& differential(std::size_t i) const { return differentials_.at(i - 1); }
  FPModule homology(std::size_t i) const;
  /// All d_i d_{i+1} vanish.
  bool verify() const;

 private:
  std::vector<Polynomial> sequence_;
  FPModule module_;
  std::vector<FPModule> terms_;
  std::vector<ModuleHom> differentials_;
};

KoszulComplex koszul_complex(const std::vector<Polynomial>& x, const FPModule& m);

/// Graded Betti numbers beta_{i,j} for i <= length and j <= degree_bound, built
/// by linear algebra over k one degree at a time (no Groebner bases).
BettiTable truncated_linear_resolution(const FPModule& m, std::size_t length, int degree_bound);

/// Restricts a table to internal degrees <= degree_bound and rows <= length.
BettiTable truncate_table(const BettiTable& t, std::size_t length, int degree_bound);
std::string betti_table_to_string(const BettiTable& t);

}  // namespace syz
