#include "syzygy/loci.hpp"

#include "syzygy/errors.hpp"

#include <sstream>

namespace syz {

std::string to_string(LocusKind k) {
  switch (k) {
    case LocusKind::singular:
      return "singular";
    case LocusKind::non_free:
      return "non-free";
    case LocusKind::ipd:
      return "ipd";
  }
  return "";
}

bool radical_contains(const QuotientRingPtr& ring, const std::vector<Polynomial>& ideal, const Polynomial& f,
                      unsigned max_exponent) {
  Polynomial p = ring->reduce(f);
  for (unsigned e = 1; e <= max_exponent; ++e) {
    if (ideal_contains(ring, ideal, p)) return true;
    p = ring->reduce(p * f);
  }
  return false;
}

bool LocusDescription::is_empty() const { return is_unit_ideal(ring, defining_ideal); }

bool LocusDescription::is_closed_point() const {
  if (is_empty()) return false;
  for (std::size_t i = 0; i < ring->num_variables(); ++i)
    if (!radical_contains(ring, defining_ideal, ring->var(i))) return false;
  return true;
}

std::string LocusDescription::describe() const {
  std::ostringstream out;
  out << to_string(kind) << " locus ";
  if (is_empty()) {
    out << "empty";
  } else {
    out << "V(";
    for (std::size_t i = 0; i < defining_ideal.size(); ++i) out << (i ? ", " : "") << defining_ideal[i].to_string();
    out << ")";
    if (is_closed_point()) out << " = {m}";
  }
  for (const auto& f : validity_flags) out << " [" << f << "]";
  return out.str();
}

bool locus_within(const LocusDescription& a, const LocusDescription& b) {
  require_same_ring(*a.ring, *b.ring);
  if (a.is_empty()) return true;
  for (const auto& g : b.defining_ideal)
    if (!radical_contains(a.ring, a.defining_ideal, g)) return false;
  return true;
}

bool same_locus(const LocusDescription& a, const LocusDescription& b) { return locus_within(a, b) && locus_within(b, a); }

Polynomial determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(m.ring(), 1);
  if (n == 1) return m(0, 0);
  Polynomial out(m.ring());
  std::vector<std::size_t> rows;
  for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    Polynomial sub = determinant(m.select_rows(rows).select_columns(cols));
    Polynomial term = m(0, j) * sub;
    out = (j % 2 == 0) ? out + term : out - term;
  }
  return out;
}

namespace {

void subsets(std::size_t n, std::size_t c, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == c) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, c, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t c) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, c, 0, cur, out);
  return out;
}

bool is_cohen_macaulay(const QuotientRingPtr& ring) {
  return static_cast<int>(depth(ring)) == krull_dimension(ring);
}

}  // namespace

std::vector<Polynomial> minors(const Matrix& m, std::size_t c) {
  if (c > m.rows() || c > m.cols())
    throw ShapeError("minor size " + std::to_string(c) + " exceeds the " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + " matrix");
  if (c == 0) return {Polynomial::constant(m.ring(), 1)};
  std::vector<Polynomial> out;
  for (const auto& r : subsets(m.rows(), c))
    for (const auto& k : subsets(m.cols(), c)) {
      Polynomial d = determinant(m.select_rows(r).select_columns(k));
      if (!d.is_zero()) out.push_back(d);
    }
  return out;
}

Matrix jacobian(const QuotientRing& ring) {
  const auto& gens = ring.generators();
  Matrix j(ring.ambient(), gens.size(), ring.num_variables());
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (std::size_t c = 0; c < ring.num_variables(); ++c) j(r, c) = gens[r].derivative(c);
  return j;
}

LocusDescription singular_locus(const QuotientRingPtr& ring, std::size_t codim) {
  LocusDescription out;
  out.kind = LocusKind::singular;
  out.ring = ring;
  std::vector<Polynomial> ideal = minors(jacobian(*ring), codim);
  std::vector<Polynomial> reduced;
  for (const auto& p : ideal) {
    Polynomial q = ring->reduce(p);
    if (!q.is_zero()) reduced.push_back(q);
  }
  out.defining_ideal = reduced.empty() ? std::vector<Polynomial>{} : minimize_ideal(ring, reduced);
  if (!is_cohen_macaulay(ring)) out.validity_flags.push_back("unsupported: ring not verified equidimensional");
  int dim = krull_dimension(ring);
  if (static_cast<int>(ring->num_variables()) - dim != static_cast<int>(codim))
    out.validity_flags.push_back("codimension " + std::to_string(codim) + " differs from the computed " +
                                 std::to_string(static_cast<int>(ring->num_variables()) - dim));
  return out;
}

LocusDescription non_free_locus(const FPModule& m0) {
  FPModule m = m0.is_minimal() ? m0 : minimal_presentation(m0);
  LocusDescription out;
  out.kind = LocusKind::non_free;
  out.ring = m.ring();
  if (m.num_relations() == 0) {
    out.defining_ideal = {m.ring()->constant(1)};
    return out;
  }
  HomologyReport e = ext(m, syzygy(m, 1), 1);
  FPModule em = minimal_presentation(e.module);
  out.defining_ideal = em.num_generators() == 0 ? std::vector<Polynomial>{m.ring()->constant(1)} : annihilator(em);
  return out;
}

LocusDescription ipd_locus(const FPModule& m, std::size_t d) {
  LocusDescription out = non_free_locus(syzygy(m, d));
  out.kind = LocusKind::ipd;
  const auto& ring = m.ring();
  if (krull_dimension(ring) != static_cast<int>(d))
    out.validity_flags.push_back("d = " + std::to_string(d) + " is not dim R");
  if (!is_cohen_macaulay(ring)) out.validity_flags.push_back("ring not Cohen-Macaulay");
  return out;
}

}  // namespace syz
