#include "syzygy/scalar.hpp"

#include "syzygy/errors.hpp"

#include <stdexcept>

namespace syz {

namespace {

bool is_prime_number(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2) is the inverse.
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime_number(p) || p >= (1u << 31))
    throw Error("field characteristic " + std::to_string(p) + " is not a supported prime");
  return Field{p};
}

std::string Field::name() const {
  return is_prime() ? "GF(" + std::to_string(characteristic) + ")" : "QQ";
}

Scalar::Scalar(const Field& field, long long value) {
  if (field.is_prime()) {
    long long p = field.characteristic;
    long long r = value % p;
    if (r < 0) r += p;
    rep_ = Residue{static_cast<std::uint32_t>(r), field.characteristic};
  } else {
    rep_ = mpq_class(static_cast<long>(value));
  }
}

Scalar::Scalar(const Field& field, const mpq_class& value) {
  if (field.is_prime()) {
    mpz_class p = field.characteristic;
    mpz_class num = value.get_num() % p;
    mpz_class den = value.get_den() % p;
    if (num < 0) num += p;
    if (den < 0) den += p;
    if (den == 0) throw std::domain_error("denominator vanishes modulo " + field.name());
    auto n = static_cast<std::uint32_t>(num.get_ui());
    auto d = static_cast<std::uint32_t>(den.get_ui());
    std::uint64_t v = static_cast<std::uint64_t>(n) * mod_inverse(d, field.characteristic) %
                      field.characteristic;
    rep_ = Residue{static_cast<std::uint32_t>(v), field.characteristic};
  } else {
    mpq_class q = value;
    q.canonicalize();
    rep_ = q;
  }
}

Field Scalar::field() const {
  if (auto* r = std::get_if<Residue>(&rep_)) return Field{r->modulus};
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<Residue>(&rep_)) return r->value == 0;
  return sgn(std::get<mpq_class>(rep_)) == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<Residue>(&rep_)) return r->value == 1;
  return std::get<mpq_class>(rep_) == 1;
}

namespace {

[[noreturn]] void mismatch() { throw RingMismatchError("scalars from different fields"); }

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar out;
  if (auto* a = std::get_if<Residue>(&rep_)) {
    auto* b = std::get_if<Residue>(&o.rep_);
    if (!b || b->modulus != a->modulus) mismatch();
    std::uint32_t s = a->value + b->value;
    if (s >= a->modulus) s -= a->modulus;
    out.rep_ = Residue{s, a->modulus};
    return out;
  }
  auto* b = std::get_if<mpq_class>(&o.rep_);
  if (!b) mismatch();
  out.rep_ = mpq_class(std::get<mpq_class>(rep_) + *b);
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out;
  if (auto* a = std::get_if<Residue>(&rep_)) {
    out.rep_ = Residue{a->value == 0 ? 0 : a->modulus - a->value, a->modulus};
    return out;
  }
  out.rep_ = mpq_class(-std::get<mpq_class>(rep_));
  return out;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar out;
  if (auto* a = std::get_if<Residue>(&rep_)) {
    auto* b = std::get_if<Residue>(&o.rep_);
    if (!b || b->modulus != a->modulus) mismatch();
    out.rep_ = Residue{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a->value) *
                                                  b->value % a->modulus),
                       a->modulus};
    return out;
  }
  auto* b = std::get_if<mpq_class>(&o.rep_);
  if (!b) mismatch();
  out.rep_ = mpq_class(std::get<mpq_class>(rep_) * *b);
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar out;
  if (auto* a = std::get_if<Residue>(&rep_)) {
    out.rep_ = Residue{mod_inverse(a->value, a->modulus), a->modulus};
    return out;
  }
  out.rep_ = mpq_class(1 / std::get<mpq_class>(rep_));
  return out;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

std::uint32_t Scalar::residue() const {
  if (auto* a = std::get_if<Residue>(&rep_)) return a->value;
  throw Error("residue() called on a rational scalar");
}

mpq_class Scalar::rational() const {
  if (auto* a = std::get_if<Residue>(&rep_)) return mpq_class(static_cast<unsigned long>(a->value));
  return std::get<mpq_class>(rep_);
}

std::string Scalar::to_string() const {
  if (auto* a = std::get_if<Residue>(&rep_)) {
    // Print the symmetric representative: -1 reads better than 32002.
    long long v = a->value;
    if (v > static_cast<long long>(a->modulus / 2)) v -= a->modulus;
    return std::to_string(v);
  }
  return std::get<mpq_class>(rep_).get_str();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (auto* x = std::get_if<Scalar::Residue>(&a.rep_)) {
    auto* y = std::get_if<Scalar::Residue>(&b.rep_);
    return y && x->value == y->value && x->modulus == y->modulus;
  }
  auto* y = std::get_if<mpq_class>(&b.rep_);
  return y && std::get<mpq_class>(a.rep_) == *y;
}

}  // namespace syz
