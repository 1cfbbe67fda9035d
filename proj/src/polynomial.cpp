#include "syzygy/polynomial.hpp"

#include "syzygy/errors.hpp"

#include <algorithm>
#include <sstream>

namespace syz {

PolyRing::PolyRing(std::vector<std::string> variables, std::vector<int> weights, Field field)
    : variables_(std::move(variables)), weights_(std::move(weights)), field_(field) {
  if (variables_.size() > kMaxVariables)
    throw Error("at most " + std::to_string(kMaxVariables) + " variables are supported");
  if (weights_.size() != variables_.size())
    throw ShapeError("weights must list one positive integer per variable");
  for (int w : weights_)
    if (w <= 0) throw HomogeneityError("variable weights must be positive");
  for (std::size_t i = 0; i < variables_.size(); ++i)
    for (std::size_t j = i + 1; j < variables_.size(); ++j)
      if (variables_[i] == variables_[j]) throw Error("duplicate variable name " + variables_[i]);
}

bool PolyRing::is_standard_graded() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

int PolyRing::variable_index(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return static_cast<int>(i);
  return -1;
}

std::string PolyRing::monomial_to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variables_[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

bool PolyRing::same_as(const PolyRing& other) const {
  return this == &other || (variables_ == other.variables_ && weights_ == other.weights_ &&
                            field_ == other.field_);
}

PolyRingPtr make_poly_ring(std::vector<std::string> variables, std::vector<int> weights,
                           Field field) {
  return std::make_shared<const PolyRing>(std::move(variables), std::move(weights), field);
}

namespace {

bool term_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

// Merge two descending term lists, scaling the second by `sign`.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back(negate_b ? Term{-b[j].coeff, b[j].mono} : b[j]);
      ++j;
    } else {
      Scalar c = negate_b ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back(Term{c, a[i].mono});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(PolyRingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(PolyRingPtr ring, const Scalar& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back(Term{c, Monomial{}});
  return p;
}

Polynomial Polynomial::constant(PolyRingPtr ring, long long c) {
  Scalar s(ring->field(), c);
  return constant(std::move(ring), s);
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t index) {
  if (index >= ring->num_variables()) throw ShapeError("variable index out of range");
  Monomial m = ring->variable_monomial(index);
  Scalar one = Scalar::one(ring->field());
  return monomial(std::move(ring), one, m);
}

Polynomial Polynomial::monomial(PolyRingPtr ring, const Scalar& c, const Monomial& m) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back(Term{c, m});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0);
}

int Polynomial::degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

Scalar Polynomial::constant_coefficient() const {
  if (!terms_.empty() && terms_.back().mono.degree() == 0) return terms_.back().coeff;
  return Scalar::zero(ring_ ? ring_->field() : Field{});
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (ring_ == o.ring_) return;
  if ((!ring_ && is_zero()) || (!o.ring_ && o.is_zero())) return;
  if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_))
    throw RingMismatchError("polynomials belong to different ambient rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  Polynomial out(ring_ ? ring_ : o.ring_);
  out.terms_ = merge(terms_, o.terms_, false);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_ring(o);
  Polynomial out(ring_ ? ring_ : o.ring_);
  out.terms_ = merge(terms_, o.terms_, true);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(Term{-t.coeff, t.mono});
  return out;
}

Polynomial Polynomial::times_monomial(const Scalar& c, const Monomial& m) const {
  Polynomial out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(Term{t.coeff * c, t.mono * m});
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  Polynomial out(ring_ ? ring_ : o.ring_);
  // Accumulate partial products; each partial product is already sorted.
  for (const auto& t : o.terms_) out.terms_ = merge(out.terms_, times_monomial(t.coeff, t.mono).terms_, false);
  return out;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(Term{t.coeff * c, t.mono});
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.mono[var];
    if (e == 0) continue;
    auto exps = t.mono.exponents();
    exps[var] -= 1;
    out.push_back(Term{t.coeff * Scalar(ring_->field(), e), ring_->monomial(exps)});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff.is_one()) return *this;
  return scaled(terms_.front().coeff.inverse());
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coeff.to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c = c.substr(1);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool unit_coeff = (c == "1");
    if (t.mono.degree() == 0) {
      out << c;
    } else {
      if (!unit_coeff) out << c << '*';
      out << ring_->monomial_to_string(t.mono);
    }
  }
  return out.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

Polynomial poly_arith(ArithOp op, const Polynomial& a, const Polynomial& b) {
  if (a.ring() && b.ring() && a.ring() != b.ring() && !a.ring()->same_as(*b.ring()))
    throw RingMismatchError("poly_arith operands belong to different rings");
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::scalar_mul:
      if (!b.is_constant()) throw ShapeError("scalar_mul expects a constant second operand");
      return a.scaled(b.constant_coefficient());
  }
  return a;
}

}  // namespace syz
