#pragma once

#include "syzygy/polynomial.hpp"

#include <memory>
#include <string>
#include <vector>

namespace syz {

namespace detail {
class GbEngine;
}

/// R = k[x_1..x_n] / I for a weighted-homogeneous ideal I. The maximal ideal
/// is the ideal of all variables. Graded avatars stand in for the complete
/// local rings they model.
class QuotientRing {
 public:
  QuotientRing(PolyRingPtr ambient, std::vector<Polynomial> generators, std::string label = {});

  const PolyRingPtr& ambient() const { return ambient_; }
  const Field& field() const { return ambient_->field(); }
  std::size_t num_variables() const { return ambient_->num_variables(); }
  const std::vector<std::string>& variables() const { return ambient_->variables(); }
  const std::vector<int>& weights() const { return ambient_->weights(); }
  bool is_standard_graded() const { return ambient_->is_standard_graded(); }

  /// Generators exactly as supplied.
  const std::vector<Polynomial>& generators() const { return generators_; }
  /// Reduced (autoreduced, monic) Groebner basis of the defining ideal.
  const std::vector<Polynomial>& reduced_gb() const { return reduced_gb_; }
  const std::string& label() const { return label_; }

  Polynomial reduce(const Polynomial& p) const;
  bool is_zero(const Polynomial& p) const { return reduce(p).is_zero(); }

  Polynomial var(std::size_t i) const { return Polynomial::variable(ambient_, i); }
  Polynomial var(const std::string& name) const;
  Polynomial constant(long long c) const { return Polynomial::constant(ambient_, c); }
  Polynomial zero() const { return Polynomial(ambient_); }
  /// Parses an expression in this ring's variables.
  Polynomial parse(const std::string& text) const;

  /// True when every variable vanishes in R, so R is the residue field.
  bool is_field() const;

  bool same_as(const QuotientRing& other) const;

  /// `ring R = GF(p)[...] weights [...] mod [...]`
  std::string to_text(const std::string& name) const;
  /// Note recorded in reports: the graded ring stands in for its completion.
  std::string modeling_note() const;

  const detail::GbEngine& ideal_engine() const { return *engine_; }

 private:
  PolyRingPtr ambient_;
  std::vector<Polynomial> generators_;
  std::vector<Polynomial> reduced_gb_;
  std::string label_;
  std::shared_ptr<const detail::GbEngine> engine_;
};

using QuotientRingPtr = std::shared_ptr<const QuotientRing>;

QuotientRingPtr make_quotient_ring(PolyRingPtr ambient, std::vector<Polynomial> generators,
                                   std::string label = {});
QuotientRingPtr make_quotient_ring(std::vector<std::string> variables, std::vector<int> weights,
                                   Field field, const std::vector<std::string>& generators,
                                   std::string label = {});

/// R / (extra), sharing R's ambient ring.
QuotientRingPtr quotient_by(const QuotientRingPtr& ring, const std::vector<Polynomial>& extra,
                            std::string label = {});

/// Throws RingMismatchError unless both rings are the same.
void require_same_ring(const QuotientRing& a, const QuotientRing& b);

/// Polynomial-expression reader: integers, variables, `+ - * ^` and parentheses.
Polynomial parse_polynomial(const std::string& text, const PolyRingPtr& ring);

}  // namespace syz
