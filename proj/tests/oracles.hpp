#pragma once

// Groebner-free reference computations used to cross-check the engine.

#include "syzygy/linalg.hpp"
#include "syzygy/module.hpp"

#include <map>
#include <utility>

namespace oracle {

using namespace syz;

/// Coordinates of the degree-t part of the ambient free module F (monomial
/// times generator), built from plain enumeration.
struct DegreePiece {
  std::map<std::pair<std::size_t, Monomial>, std::size_t> index;
  std::size_t size() const { return index.size(); }
};

inline DegreePiece free_piece(const QuotientRing& ring, const std::vector<int>& shifts, int t) {
  DegreePiece p;
  for (std::size_t i = 0; i < shifts.size(); ++i)
    for (const auto& m : monomials_of_degree(*ring.ambient(), t - shifts[i])) {
      std::size_t k = p.index.size();
      p.index.emplace(std::make_pair(i, m), k);
    }
  return p;
}

inline std::vector<Scalar> flatten(const DegreePiece& p, const ModuleVector& v, const Field& f) {
  std::vector<Scalar> out(p.size(), Scalar::zero(f));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& t : v[i].terms()) out[p.index.at({i, t.mono})] += t.coeff;
  return out;
}

/// dim_k M_t computed as dim F_t - dim (relations + I F)_t by row reduction.
inline long long hilbert_value(const FPModule& m, int t) {
  const auto& ring = *m.ring();
  const Field f = ring.field();
  DegreePiece piece = free_piece(ring, m.generator_shifts(), t);
  if (piece.size() == 0) return 0;
  std::vector<std::vector<Scalar>> rows;
  auto add_multiples = [&](const ModuleVector& v, int deg) {
    for (const auto& mono : monomials_of_degree(*ring.ambient(), t - deg)) {
      ModuleVector w = v;
      for (auto& e : w) e = e.times_monomial(Scalar::one(f), mono);
      rows.push_back(flatten(piece, w, f));
    }
  };
  const Matrix& p = m.presentation();
  for (std::size_t c = 0; c < p.cols(); ++c) add_multiples(p.column(c), m.relation_shifts()[c]);
  for (std::size_t i = 0; i < m.num_generators(); ++i)
    for (const auto& g : ring.generators()) {
      ModuleVector v(m.num_generators(), Polynomial(ring.ambient()));
      v[i] = g;
      add_multiples(v, g.degree() + m.generator_shifts()[i]);
    }
  if (rows.empty()) return static_cast<long long>(piece.size());
  DenseMatrix mat(f, rows.size(), piece.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < piece.size(); ++c) mat(r, c) = rows[r][c];
  return static_cast<long long>(piece.size() - rank(mat));
}

inline std::vector<long long> hilbert_function(const FPModule& m, int from, int to) {
  std::vector<long long> out;
  for (int t = from; t <= to; ++t) out.push_back(hilbert_value(m, t));
  return out;
}

}  // namespace oracle
