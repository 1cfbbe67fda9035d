#include "syzygy/ring.hpp"

#include "syzygy/detail/gb_engine.hpp"
#include "syzygy/errors.hpp"

#include <cctype>
#include <sstream>

namespace syz {

using detail::GbEngine;
using detail::ModPoly;
using detail::ModTerm;

namespace {

ModPoly as_modpoly(const Polynomial& p) {
  ModPoly v;
  v.reserve(p.size());
  for (const auto& t : p.terms()) v.push_back(ModTerm{t.coeff, t.mono, 0});
  return v;
}

Polynomial from_modpoly(const PolyRingPtr& ring, const ModPoly& v) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) terms.push_back(Term{t.coeff, t.mono});
  return Polynomial(ring, std::move(terms));
}

}  // namespace

QuotientRing::QuotientRing(PolyRingPtr ambient, std::vector<Polynomial> generators,
                           std::string label)
    : ambient_(std::move(ambient)), generators_(std::move(generators)), label_(std::move(label)) {
  for (const auto& g : generators_) {
    if (g.ring() && !g.ring()->same_as(*ambient_))
      throw RingMismatchError("ideal generator lives in a different ring");
    if (!g.is_homogeneous()) {
      // Name the first term whose degree differs from the leading one.
      for (const auto& t : g.terms()) {
        if (t.mono.degree() != g.degree()) {
          throw HomogeneityError("generator " + g.to_string() + " is not weighted-homogeneous: term " +
                                 ambient_->monomial_to_string(t.mono) + " has degree " +
                                 std::to_string(t.mono.degree()) + ", leading term has degree " +
                                 std::to_string(g.degree()));
        }
      }
    }
    if (g.is_unit()) throw DegenerateRingError("generator " + g.to_string() + " is a unit; the ideal is the whole ring");
  }
  auto engine = std::make_shared<GbEngine>(ambient_, std::vector<int>{0});
  for (const auto& g : generators_)
    if (!g.is_zero()) engine->add_generator(as_modpoly(g));
  engine->complete();
  for (const auto& v : engine->reduced_basis()) reduced_gb_.push_back(from_modpoly(ambient_, v));
  engine_ = std::move(engine);
}

Polynomial QuotientRing::reduce(const Polynomial& p) const {
  if (reduced_gb_.empty() || p.is_zero()) return p;
  return from_modpoly(ambient_, engine_->reduce(as_modpoly(p)));
}

Polynomial QuotientRing::var(const std::string& name) const {
  int i = ambient_->variable_index(name);
  if (i < 0) throw Error("unknown variable " + name);
  return var(static_cast<std::size_t>(i));
}

Polynomial QuotientRing::parse(const std::string& text) const {
  return parse_polynomial(text, ambient_);
}

bool QuotientRing::is_field() const {
  for (std::size_t i = 0; i < num_variables(); ++i)
    if (!is_zero(var(i))) return false;
  return true;
}

bool QuotientRing::same_as(const QuotientRing& other) const {
  if (this == &other) return true;
  if (!ambient_->same_as(*other.ambient_)) return false;
  return reduced_gb_ == other.reduced_gb_;
}

std::string QuotientRing::to_text(const std::string& name) const {
  std::ostringstream out;
  out << "ring " << name << " = " << field().name() << "[";
  for (std::size_t i = 0; i < num_variables(); ++i) out << (i ? "," : "") << variables()[i];
  out << "] weights [";
  for (std::size_t i = 0; i < num_variables(); ++i) out << (i ? "," : "") << weights()[i];
  out << "]";
  if (!generators_.empty()) {
    out << " mod [";
    for (std::size_t i = 0; i < generators_.size(); ++i)
      out << (i ? ", " : "") << generators_[i].to_string();
    out << "]";
  }
  return out.str();
}

std::string QuotientRing::modeling_note() const {
  return "graded polynomial quotient standing in for its completion at the homogeneous maximal ideal";
}

QuotientRingPtr make_quotient_ring(PolyRingPtr ambient, std::vector<Polynomial> generators,
                                   std::string label) {
  return std::make_shared<const QuotientRing>(std::move(ambient), std::move(generators),
                                              std::move(label));
}

QuotientRingPtr make_quotient_ring(std::vector<std::string> variables, std::vector<int> weights,
                                   Field field, const std::vector<std::string>& generators,
                                   std::string label) {
  auto ambient = make_poly_ring(std::move(variables), std::move(weights), field);
  std::vector<Polynomial> gens;
  for (const auto& g : generators) gens.push_back(parse_polynomial(g, ambient));
  return make_quotient_ring(ambient, std::move(gens), std::move(label));
}

QuotientRingPtr quotient_by(const QuotientRingPtr& ring, const std::vector<Polynomial>& extra,
                            std::string label) {
  std::vector<Polynomial> gens = ring->generators();
  for (const auto& e : extra)
    if (!ring->is_zero(e)) gens.push_back(e);
  return make_quotient_ring(ring->ambient(), std::move(gens), std::move(label));
}

void require_same_ring(const QuotientRing& a, const QuotientRing& b) {
  if (!a.same_as(b)) throw RingMismatchError("objects are defined over different rings");
}

// ---------------------------------------------------------------------------
// Expression reader

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& text, const PolyRingPtr& ring) : s_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw Error("cannot parse polynomial \"" + s_ + "\": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = power();
    for (;;) {
      skip();
      if (accept('*')) {
        acc *= power();
      } else if (pos_ < s_.size() &&
                 (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
        acc *= power();  // implicit multiplication, e.g. 2x
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("missing ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class value(s_.substr(start, pos_ - start));
      if (accept('/')) {
        skip();
        std::size_t ds = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (ds == pos_) fail("expected denominator");
        mpq_class q(value, mpz_class(s_.substr(ds, pos_ - ds)));
        return Polynomial::constant(ring_, Scalar(ring_->field(), q));
      }
      return Polynomial::constant(ring_, Scalar(ring_->field(), mpq_class(value)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      int idx = ring_->variable_index(name);
      if (idx < 0) fail("unknown variable '" + name + "'");
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  PolyRingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const PolyRingPtr& ring) {
  return ExprParser(text, ring).parse();
}

}  // namespace syz
