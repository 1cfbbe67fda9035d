#include "syzygy/monomial.hpp"

#include <algorithm>

namespace syz {

namespace {

int weighted(const Monomial::Exponents& e, std::span<const int> weights) {
  int d = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) d += weights[i] * e[i];
  return d;
}

}  // namespace

Monomial::Monomial(const Exponents& exps, std::span<const int> weights)
    : exps_(exps), degree_(weighted(exps, weights)) {}

Monomial Monomial::variable(std::size_t index, std::span<const int> weights) {
  Exponents e{};
  e[index] = 1;
  return Monomial(e, weights);
}

int Monomial::total_degree() const {
  int t = 0;
  for (auto e : exps_) t += e;
  return t;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial q;
  for (std::size_t i = 0; i < kMaxVariables; ++i) q.exps_[i] = exps_[i] - divisor.exps_[i];
  q.degree_ = degree_ - divisor.degree_;
  return q;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial p;
  for (std::size_t i = 0; i < kMaxVariables; ++i) p.exps_[i] = exps_[i] + other.exps_[i];
  p.degree_ = degree_ + other.degree_;
  return p;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] && other.exps_[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b, std::span<const int> weights) {
  Monomial::Exponents e{};
  for (std::size_t i = 0; i < kMaxVariables; ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
  return Monomial(e, weights);
}

Monomial gcd(const Monomial& a, const Monomial& b, std::span<const int> weights) {
  Monomial::Exponents e{};
  for (std::size_t i = 0; i < kMaxVariables; ++i) e[i] = std::min(a.exps_[i], b.exps_[i]);
  return Monomial(e, weights);
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (a.exps_[i] != b.exps_[i])
      // Reverse lex: a smaller exponent in the last differing variable wins.
      return b.exps_[i] <=> a.exps_[i];
  }
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  std::size_t h = static_cast<std::size_t>(degree_);
  for (auto e : exps_) h = h * 1000003u ^ e;
  return h;
}

}  // namespace syz
