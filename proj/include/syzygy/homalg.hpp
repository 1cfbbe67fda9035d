#pragma once

#include "syzygy/resolution.hpp"

#include <optional>
#include <string>
#include <vector>

namespace syz {

/// A homology module together with its size: the k-dimension when it has
/// finite length, otherwise a truncated Hilbert function.
struct HomologyReport {
  explicit HomologyReport(std::size_t i, FPModule m) : index(i), module(std::move(m)) {}

  std::size_t index = 0;
  FPModule module;
  std::optional<long long> finite_length_dimension;
  int hf_from = 0;
  int hf_bound = kDefaultHilbertBound;
  std::vector<long long> truncated_hf;

  bool is_zero() const { return finite_length_dimension && *finite_length_dimension == 0; }
  std::string describe() const;
};

HomologyReport make_homology_report(std::size_t index, FPModule module);

/// Tor_i(M, N) from the minimal resolution of M tensored with N.
HomologyReport tor(const FPModule& m, const FPModule& n, std::size_t i);
/// Ext^i(M, N) from Hom(minimal resolution of M, N).
HomologyReport ext(const FPModule& m, const FPModule& n, std::size_t i);

/// F (x) N and Hom(F, N) for a free module F, as presented modules.
FPModule tensor_free(const FreeModule& f, const FPModule& n);
FPModule hom_free(const FreeModule& f, const FPModule& n);

/// Least i with Ext^i(k, M) != 0. Throws ZeroModuleError for M = 0.
std::size_t depth(const FPModule& m);
std::size_t depth(const QuotientRingPtr& ring);

struct BassReport {
  std::vector<long long> mu;  // mu^0 .. mu^max
  std::size_t depth = 0;
  /// Some mu^i with i > depth vanishes inside the probed range. A hint only.
  bool finite_injdim_hint = false;
};

BassReport bass_numbers(const FPModule& n, std::size_t max_index);

struct ProjectiveDimensionReport {
  enum class Kind { exact, at_least, infinite };
  Kind kind = Kind::exact;
  std::size_t value = 0;  // exact value, or the lower bound
  std::string reason;
  bool is_finite() const { return kind == Kind::exact; }
  std::string describe() const;
};

/// Exact when the resolution stops by `bound`; otherwise a lower bound,
/// upgraded to infinite when it already exceeds depth R, which bounds every
/// finite projective dimension.
ProjectiveDimensionReport projective_dimension(const FPModule& m, std::size_t bound);

struct RegularSequenceReport {
  bool regular = true;
  /// Index of the first element with a kernel, if any.
  std::optional<std::size_t> failing_index;
  /// Nonzero kernel element in M / (x_1..x_{j-1}) M.
  ModuleVector witness;
  std::string reason;
};

RegularSequenceReport is_regular_sequence(const std::vector<Polynomial>& x, const FPModule& m);

/// Multiplication by f as a degree-0 map M -> M(deg f).
ModuleHom multiplication_map(const FPModule& m, const Polynomial& f);

}  // namespace syz
