#pragma once

#include "syzygy/monomial.hpp"
#include "syzygy/scalar.hpp"

#include <memory>
#include <string>
#include <vector>

namespace syz {

/// Ambient weighted polynomial ring k[x_1..x_n] with the weighted degree
/// reverse lexicographic order.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> variables, std::vector<int> weights, Field field);

  std::size_t num_variables() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<int>& weights() const { return weights_; }
  const Field& field() const { return field_; }
  bool is_standard_graded() const;

  /// Index of a variable by name, or -1.
  int variable_index(const std::string& name) const;
  Monomial monomial(const Monomial::Exponents& exps) const { return Monomial(exps, weights_); }
  Monomial variable_monomial(std::size_t i) const { return Monomial::variable(i, weights_); }
  Monomial lcm(const Monomial& a, const Monomial& b) const { return syz::lcm(a, b, weights_); }

  std::string monomial_to_string(const Monomial& m) const;

  /// Structural equality: same names, weights and field.
  bool same_as(const PolyRing& other) const;

 private:
  std::vector<std::string> variables_;
  std::vector<int> weights_;
  Field field_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_poly_ring(std::vector<std::string> variables, std::vector<int> weights,
                           Field field = Field{});

struct Term {
  Scalar coeff;
  Monomial mono;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in canonical form: terms strictly descending in the term
/// order, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}
  /// Normalizes: sorts, merges equal monomials, drops zeros.
  Polynomial(PolyRingPtr ring, std::vector<Term> terms);

  static Polynomial constant(PolyRingPtr ring, const Scalar& c);
  static Polynomial constant(PolyRingPtr ring, long long c);
  static Polynomial variable(PolyRingPtr ring, std::size_t index);
  static Polynomial monomial(PolyRingPtr ring, const Scalar& c, const Monomial& m);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// A nonzero constant.
  bool is_unit() const { return is_constant() && !is_zero(); }
  const Term& leading_term() const { return terms_.front(); }
  /// Weighted degree of the leading term; 0 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// Constant coefficient (zero if absent).
  Scalar constant_coefficient() const;
  std::size_t size() const { return terms_.size(); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_monomial(const Scalar& c, const Monomial& m) const;
  Polynomial pow(unsigned e) const;
  Polynomial derivative(std::size_t var) const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& o) const;

  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

enum class ArithOp { add, mul, scalar_mul };

/// Dispatching arithmetic entry point. For scalar_mul, b must be a constant.
Polynomial poly_arith(ArithOp op, const Polynomial& a, const Polynomial& b);

}  // namespace syz
