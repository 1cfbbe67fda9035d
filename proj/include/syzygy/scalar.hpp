#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <variant>

namespace syz {

/// Coefficient field descriptor: a prime field F_p or the rationals.
struct Field {
  /// 0 denotes the rationals.
  std::uint32_t characteristic = 32003;

  static Field prime(std::uint32_t p);
  static Field rationals() { return Field{0}; }

  bool is_prime() const { return characteristic != 0; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;
};

/// Exact field element, stored in canonical form: a residue 0 <= v < p, or a
/// fully reduced fraction with positive denominator.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Field& field, long long value);
  Scalar(const Field& field, const mpq_class& value);

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;

  /// Residue for prime fields (throws for rationals).
  std::uint32_t residue() const;
  /// Value as a rational (prime-field residues map to their representative).
  mpq_class rational() const;

  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };
  std::variant<Residue, mpq_class> rep_{Residue{0, 32003}};
};

}  // namespace syz
