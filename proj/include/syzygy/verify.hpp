#pragma once

#include "syzygy/loci.hpp"
#include "syzygy/structure.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace syz {

/// The same presentation read over R / I. The ambient ring must be shared.
FPModule extend_to_quotient(const FPModule& m, const QuotientRingPtr& quotient);
/// An R / I-module regarded as an R-module.
FPModule restrict_scalars(const FPModule& m, const QuotientRingPtr& base, const std::vector<Polynomial>& ideal);
/// First element g e_j with g in I that is nonzero in M, if any.
std::optional<std::pair<Polynomial, std::size_t>> ideal_action_witness(const FPModule& m,
                                                                      const std::vector<Polynomial>& ideal);
/// I M = 0 and M is free over R / I.
bool is_free_over_quotient(const FPModule& m, const std::vector<Polynomial>& ideal);

/// Which of the five summand patterns the syzygies of M show, for a ring
/// whose maximal ideal is I + J.
struct SyzygyCaseReport {
  /// "i", "ii", "iii", "iv", "v" or "none-detected".
  std::string label;
  std::optional<SplitCertificate> certificate;
  std::optional<DecompositionCertificate> decomposition;
  /// Outcome of every probe that was run, e.g. "m | syz3" -> "proved-no".
  std::map<std::string, std::string> evidence;
  std::size_t depth_quotient_i = 0;
  std::size_t depth_quotient_j = 0;
  /// A factor has depth 0, which rules out labels ii to v.
  bool depth_zero_factor = false;
  bool consistent = true;
  std::string explanation;
  std::uint64_t seed = kDefaultSeed;
};

SyzygyCaseReport classify_syzygy_case(const QuotientRingPtr& ring, const std::vector<Polynomial>& i,
                                      const std::vector<Polynomial>& j, const FPModule& m,
                                      std::size_t trials = kDefaultTrials, std::uint64_t seed = kDefaultSeed);
/// Same, with I and J read off a decomposition of the maximal ideal.
SyzygyCaseReport classify_syzygy_case(const QuotientRingPtr& ring, const FPModule& m,
                                      std::size_t trials = kDefaultTrials, std::uint64_t seed = kDefaultSeed);

/// Ideals I, J with m = I + J read off a decomposition certificate of the
/// maximal ideal built by decompose_maximal_ideal.
std::pair<std::vector<Polynomial>, std::vector<Polynomial>> summand_ideals(const QuotientRingPtr& ring,
                                                                           const DecompositionCertificate& c);

/// Certificate that the maximal ideal splits off syz3 + syz4 + syz5 of M.
SplitReport check_maximal_ideal_splits(const QuotientRingPtr& ring, const FPModule& m,
                                       std::size_t trials = kDefaultTrials, std::uint64_t seed = kDefaultSeed);

struct QuotientSyzygyReport {
  std::size_t generators = 0;
  BettiTable left;
  BettiTable right;
  bool betti_match = false;
  IsomorphismReport isomorphism;
};

/// First syzygy over R of an R / I-module N against n copies of I plus its
/// first syzygy over R / I, when the maximal ideal is I + J.
QuotientSyzygyReport check_syzygy_over_quotient(const QuotientRingPtr& ring, const std::vector<Polynomial>& ideal,
                                                const FPModule& n, std::size_t trials = kDefaultTrials,
                                                std::uint64_t seed = kDefaultSeed);

struct SyzygyShiftReport {
  BettiTable left;
  BettiTable right;
  /// Rank of the free summand on the left.
  std::size_t free_rank = 0;
  bool betti_match = false;
};

/// syz_R^u syz_{R/(x)}^t M against syz_R^{u+t} M plus a free module.
SyzygyShiftReport check_syzygy_shift(const QuotientRingPtr& ring, const std::vector<Polynomial>& x,
                                     const FPModule& m, std::size_t t, std::size_t u);

enum class Functor { tor, ext };
std::string to_string(Functor f);

struct CorollaryCheck {
  std::string rule;
  std::size_t index = 0;
  std::string conclusion;
  bool holds = true;
};

struct ScanOptions {
  std::size_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  /// Regular sequence making the maximal ideal decomposable modulo it.
  std::vector<Polynomial> quasi_sequence;
};

struct ScanReport {
  Functor functor = Functor::tor;
  std::size_t from = 0;
  std::size_t to = 0;
  /// k-dimension per index; nullopt for infinite length.
  std::vector<std::optional<long long>> dimensions;
  std::vector<bool> vanishes;
  bool decomposable_maximal_ideal = false;
  std::vector<CorollaryCheck> checks;
  std::size_t violations = 0;
};

ScanReport vanishing_scan(const FPModule& m, const FPModule& n, Functor functor, std::size_t from, std::size_t to,
                          const ScanOptions& options = {});

}  // namespace syz
