#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

namespace syz {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector with its weighted degree cached. Unused trailing slots are
/// zero, so comparisons never need the variable count.
class Monomial {
 public:
  using Exponents = std::array<std::uint16_t, kMaxVariables>;

  Monomial() = default;
  Monomial(const Exponents& exps, std::span<const int> weights);

  static Monomial variable(std::size_t index, std::span<const int> weights);

  std::uint16_t operator[](std::size_t i) const { return exps_[i]; }
  const Exponents& exponents() const { return exps_; }
  int degree() const { return degree_; }
  int total_degree() const;
  bool is_one() const { return degree_ == 0 && total_degree() == 0; }

  bool divides(const Monomial& other) const;
  /// this / divisor; the caller guarantees divisibility.
  Monomial quotient(const Monomial& divisor) const;
  Monomial operator*(const Monomial& other) const;
  /// True when no variable occurs in both.
  bool coprime(const Monomial& other) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b, std::span<const int> weights);
  friend Monomial gcd(const Monomial& a, const Monomial& b, std::span<const int> weights);

  /// Weighted degree reverse lexicographic comparison.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;

 private:
  Exponents exps_{};
  int degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b, std::span<const int> weights);
Monomial gcd(const Monomial& a, const Monomial& b, std::span<const int> weights);

}  // namespace syz

template <>
struct std::hash<syz::Monomial> {
  std::size_t operator()(const syz::Monomial& m) const noexcept { return m.hash(); }
};
