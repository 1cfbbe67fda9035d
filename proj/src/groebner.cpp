#include "syzygy/groebner.hpp"

#include "syzygy/detail/gb_engine.hpp"
#include "syzygy/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace syz {

using detail::from_modpoly;
using detail::GbEngine;
using detail::ModPoly;
using detail::to_modpoly;

namespace {

/// Engine over the ambient free module with I * e_i adjoined in the first
/// `ideal_rank` coordinates.
std::shared_ptr<GbEngine> module_engine(const QuotientRingPtr& ring, const std::vector<int>& shifts,
                                        std::size_t ideal_rank) {
  auto engine = std::make_shared<GbEngine>(ring->ambient(), shifts);
  for (std::size_t i = 0; i < ideal_rank; ++i)
    for (const auto& g : ring->reduced_gb()) {
      ModPoly v;
      for (const auto& t : g.terms()) v.push_back(detail::ModTerm{t.coeff, t.mono, static_cast<std::uint32_t>(i)});
      engine->add_generator(std::move(v));
    }
  return engine;
}

ModuleVector reduce_mod_ideal(const QuotientRing& ring, ModuleVector v) {
  for (auto& p : v) p = ring.reduce(p);
  return v;
}

bool is_zero_vector(const ModuleVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
}

void check_vector(const ModuleVector& v, const std::vector<int>& shifts, const QuotientRing& ring) {
  if (v.size() != shifts.size())
    throw ShapeError("vector has " + std::to_string(v.size()) + " coordinates, free module has rank " +
                     std::to_string(shifts.size()));
  for (const auto& p : v)
    if (p.ring() && !p.ring()->same_as(*ring.ambient()))
      throw RingMismatchError("vector entry belongs to a different ring");
}

}  // namespace

std::optional<int> vector_degree(const ModuleVector& v, const std::vector<int>& shifts) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return v[i].degree() + shifts[i];
  return std::nullopt;
}

bool is_homogeneous_vector(const ModuleVector& v, const std::vector<int>& shifts) {
  auto d = vector_degree(v, shifts);
  if (!d) return true;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& t : v[i].terms())
      if (t.mono.degree() + shifts[i] != *d) return false;
  return true;
}

// ---------------------------------------------------------------------------

GroebnerBasis::GroebnerBasis(QuotientRingPtr ring, std::vector<int> shifts,
                             const std::vector<ModuleVector>& generators, int degree_bound)
    : ring_(std::move(ring)), shifts_(std::move(shifts)), degree_bound_(degree_bound) {
  engine_ = module_engine(ring_, shifts_, shifts_.size());
  for (const auto& g : generators) {
    check_vector(g, shifts_, *ring_);
    if (!is_homogeneous_vector(g, shifts_))
      throw HomogeneityError("module generator is not homogeneous");
    engine_->add_generator(to_modpoly(g));
  }
  engine_->complete(degree_bound_);
  for (const auto& e : engine_->reduced_basis())
    elements_.push_back(from_modpoly(ring_->ambient(), e, shifts_.size()));
}

std::vector<std::vector<Monomial>> GroebnerBasis::leading_monomials() const {
  return engine_->leading_monomials();
}

ModuleVector GroebnerBasis::normal_form(const ModuleVector& v) const {
  check_vector(v, shifts_, *ring_);
  return from_modpoly(ring_->ambient(), engine_->reduce(to_modpoly(v)), shifts_.size());
}

bool GroebnerBasis::contains(const ModuleVector& v) const { return is_zero_vector(normal_form(v)); }

bool GroebnerBasis::verify() const {
  std::vector<ModPoly> basis;
  for (const auto& e : elements_) basis.push_back(to_modpoly(e));
  return detail::satisfies_buchberger_criterion(ring_->ambient(), shifts_, basis);
}

std::size_t GroebnerBasis::pairs_processed() const { return engine_->pairs_processed(); }

GroebnerBasis buchberger(const std::vector<ModuleVector>& generators, const QuotientRingPtr& ring,
                         std::vector<int> shifts) {
  if (shifts.empty()) {
    std::size_t rank = generators.empty() ? 1 : generators.front().size();
    shifts.assign(rank, 0);
  }
  return GroebnerBasis(ring, std::move(shifts), generators);
}

ModuleVector normal_form(const ModuleVector& v, const GroebnerBasis& gb) { return gb.normal_form(v); }

// ---------------------------------------------------------------------------

GradedGenerators minimal_generators(const QuotientRingPtr& ring, const std::vector<int>& shifts,
                                    std::vector<ModuleVector> candidates) {
  struct Cand {
    int degree;
    ModPoly sparse;
    ModuleVector v;
  };
  std::vector<Cand> cands;
  for (auto& c : candidates) {
    check_vector(c, shifts, *ring);
    c = reduce_mod_ideal(*ring, std::move(c));
    auto d = vector_degree(c, shifts);
    if (!d) continue;
    if (!is_homogeneous_vector(c, shifts)) throw HomogeneityError("generator is not homogeneous");
    ModPoly sp = to_modpoly(c);
    cands.push_back(Cand{*d, std::move(sp), std::move(c)});
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return detail::pot_greater(b.sparse.front(), a.sparse.front());
  });
  auto engine = module_engine(ring, shifts, shifts.size());
  GradedGenerators out;
  for (auto& c : cands) {
    engine->complete(c.degree);
    if (engine->reduce(c.sparse).empty()) continue;
    engine->add_generator(c.sparse);
    out.vectors.push_back(std::move(c.v));
    out.degrees.push_back(c.degree);
  }
  return out;
}

std::vector<int> column_degrees(const Matrix& m, const std::vector<int>& target_shifts, int fallback) {
  std::vector<int> out(m.cols(), fallback);
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (auto d = vector_degree(m.column(c), target_shifts)) out[c] = *d;
  return out;
}

GradedGenerators syzygy_basis(const Matrix& m, const QuotientRingPtr& ring,
                              const std::vector<int>& target_shifts,
                              const std::vector<int>& source_shifts, bool minimize, int degree_bound) {
  const std::size_t r = m.rows(), s = m.cols();
  if (target_shifts.size() != r || source_shifts.size() != s)
    throw ShapeError("syzygy_basis: shift lists do not match the matrix shape");
  std::vector<int> shifts = target_shifts;
  shifts.insert(shifts.end(), source_shifts.begin(), source_shifts.end());
  auto engine = module_engine(ring, shifts, r);
  for (std::size_t j = 0; j < s; ++j) {
    ModuleVector col = m.column(j);
    check_vector(col, target_shifts, *ring);
    for (std::size_t i = 0; i < r; ++i)
      for (const auto& t : col[i].terms())
        if (t.mono.degree() + target_shifts[i] != source_shifts[j])
          throw HomogeneityError("matrix entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                 col[i].to_string() + " does not have degree " +
                                 std::to_string(source_shifts[j] - target_shifts[i]));
    ModPoly v = to_modpoly(col);
    v.push_back(detail::ModTerm{Scalar::one(ring->field()), Monomial{}, static_cast<std::uint32_t>(r + j)});
    engine->add_generator(std::move(v));
  }
  engine->complete(degree_bound);
  std::vector<ModuleVector> kernel;
  for (const auto& e : engine->reduced_basis()) {
    if (e.front().comp < r) continue;
    ModuleVector v = reduce_mod_ideal(*ring, from_modpoly(ring->ambient(), e, s, static_cast<std::uint32_t>(r)));
    if (!is_zero_vector(v)) kernel.push_back(std::move(v));
  }
  if (minimize) return minimal_generators(ring, source_shifts, std::move(kernel));
  GradedGenerators out;
  for (auto& v : kernel) {
    out.degrees.push_back(*vector_degree(v, source_shifts));
    out.vectors.push_back(std::move(v));
  }
  return out;
}

std::vector<Polynomial> cokernel_annihilator(const Matrix& m, const QuotientRingPtr& ring,
                                             const std::vector<int>& target_shifts,
                                             const std::vector<int>& source_shifts) {
  const std::size_t r = m.rows(), s = m.cols();
  if (r == 0) return {ring->constant(1)};
  // f -> (f e_1, ..., f e_r) into r twisted copies of the module.
  Matrix big(ring->ambient(), r * r, 1 + r * s);
  std::vector<int> tshift(r * r), sshift(1 + r * s, 0);
  for (std::size_t i = 0; i < r; ++i) {
    big(i * r + i, 0) = ring->constant(1);
    for (std::size_t j = 0; j < r; ++j) tshift[i * r + j] = target_shifts[j] - target_shifts[i];
    for (std::size_t c = 0; c < s; ++c) {
      sshift[1 + i * s + c] = source_shifts[c] - target_shifts[i];
      for (std::size_t j = 0; j < r; ++j) big(i * r + j, 1 + i * s + c) = m(j, c);
    }
  }
  GradedGenerators ker = syzygy_basis(big, ring, tshift, sshift, false);
  std::vector<Polynomial> ann;
  for (const auto& v : ker.vectors)
    if (!ring->is_zero(v[0])) ann.push_back(v[0]);
  return minimize_ideal(ring, ann);
}

// ---------------------------------------------------------------------------

bool ideal_contains(const QuotientRingPtr& ring, const std::vector<Polynomial>& ideal, const Polynomial& f) {
  std::vector<ModuleVector> gens;
  for (const auto& g : ideal) gens.push_back({g});
  if (!f.is_homogeneous()) {
    // Homogeneous ideal: test each homogeneous component.
    std::map<int, std::vector<Term>> parts;
    for (const auto& t : f.terms()) parts[t.mono.degree()].push_back(t);
    GroebnerBasis gb(ring, {0}, gens);
    for (auto& [d, ts] : parts)
      if (!gb.contains({Polynomial(ring->ambient(), ts)})) return false;
    return true;
  }
  GroebnerBasis gb(ring, {0}, gens, f.is_zero() ? 0 : f.degree());
  return gb.contains({f});
}

bool ideals_equal(const QuotientRingPtr& ring, const std::vector<Polynomial>& a,
                  const std::vector<Polynomial>& b) {
  std::vector<ModuleVector> ga, gb;
  for (const auto& g : a) ga.push_back({g});
  for (const auto& g : b) gb.push_back({g});
  GroebnerBasis A(ring, {0}, ga), B(ring, {0}, gb);
  for (const auto& g : b)
    if (!A.contains({g})) return false;
  for (const auto& g : a)
    if (!B.contains({g})) return false;
  return true;
}

std::vector<Polynomial> minimize_ideal(const QuotientRingPtr& ring, const std::vector<Polynomial>& ideal) {
  std::vector<ModuleVector> cands;
  for (const auto& g : ideal) cands.push_back({g});
  GradedGenerators mg = minimal_generators(ring, {0}, std::move(cands));
  std::vector<Polynomial> out;
  for (auto& v : mg.vectors) out.push_back(v[0].monic());
  return out;
}

std::vector<Polynomial> ideal_quotient(const QuotientRingPtr& ring, const std::vector<Polynomial>& ideal,
                                       const Polynomial& f) {
  if (ring->is_zero(f)) return {ring->constant(1)};
  Matrix m(ring->ambient(), 1, 1 + ideal.size());
  std::vector<int> sshift{f.degree()};
  m(0, 0) = f;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    m(0, 1 + i) = ideal[i];
    sshift.push_back(ideal[i].is_zero() ? 0 : ideal[i].degree());
  }
  GradedGenerators ker = syzygy_basis(m, ring, {0}, sshift, false);
  std::vector<Polynomial> out;
  for (const auto& v : ker.vectors)
    if (!ring->is_zero(v[0])) out.push_back(v[0]);
  return minimize_ideal(ring, out);
}

std::vector<Polynomial> ideal_intersection(const QuotientRingPtr& ring, const std::vector<Polynomial>& a,
                                           const std::vector<Polynomial>& b) {
  Matrix m(ring->ambient(), 1, a.size() + b.size());
  std::vector<int> sshift;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m(0, i) = a[i];
    sshift.push_back(a[i].is_zero() ? 0 : a[i].degree());
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    m(0, a.size() + i) = b[i];
    sshift.push_back(b[i].is_zero() ? 0 : b[i].degree());
  }
  GradedGenerators ker = syzygy_basis(m, ring, {0}, sshift, false);
  std::vector<Polynomial> out;
  for (const auto& v : ker.vectors) {
    Polynomial s(ring->ambient());
    for (std::size_t i = 0; i < a.size(); ++i) s += v[i] * a[i];
    s = ring->reduce(s);
    if (!s.is_zero()) out.push_back(s);
  }
  return minimize_ideal(ring, out);
}

bool is_unit_ideal(const QuotientRingPtr& ring, const std::vector<Polynomial>& ideal) {
  for (const auto& g : ideal)
    if (ring->reduce(g).is_unit()) return true;
  return false;
}

}  // namespace syz
