#include "syzygy/resolution.hpp"

#include "syzygy/audit.hpp"
#include "syzygy/errors.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace syz {

MinimalResolution::MinimalResolution(FPModule module, std::vector<FreeModule> free_modules,
                                     std::vector<Matrix> differentials, bool terminated)
    : module_(std::move(module)),
      free_modules_(std::move(free_modules)),
      differentials_(std::move(differentials)),
      terminated_(terminated) {}

ModuleMap MinimalResolution::differential(std::size_t i) const {
  return ModuleMap{free_modules_.at(i), free_modules_.at(i - 1), differentials_.at(i - 1)};
}

std::vector<std::size_t> MinimalResolution::betti() const {
  std::vector<std::size_t> out;
  for (const auto& f : free_modules_) out.push_back(f.rank());
  return out;
}

BettiTable MinimalResolution::graded_betti() const {
  BettiTable t(free_modules_.size());
  for (std::size_t i = 0; i < free_modules_.size(); ++i)
    for (int s : free_modules_[i].shifts) ++t[i][s];
  return t;
}

bool MinimalResolution::verify() const {
  const auto& ring = module_.ring();
  for (const auto& d : differentials_)
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c)
        if (ring->reduce(d(r, c)).is_unit()) return false;
  for (std::size_t i = 0; i + 1 < differentials_.size(); ++i) {
    Matrix prod = differentials_[i] * differentials_[i + 1];
    for (std::size_t r = 0; r < prod.rows(); ++r)
      for (std::size_t c = 0; c < prod.cols(); ++c)
        if (!ring->is_zero(prod(r, c))) return false;
  }
  return true;
}

MinimalResolution MinimalResolution::truncated(std::size_t length) const {
  if (length >= differentials_.size()) return *this;
  std::vector<FreeModule> f(free_modules_.begin(), free_modules_.begin() + static_cast<std::ptrdiff_t>(length + 1));
  std::vector<Matrix> d(differentials_.begin(), differentials_.begin() + static_cast<std::ptrdiff_t>(length));
  bool term = terminated_ && f.back().rank() == 0;
  return MinimalResolution(module_, std::move(f), std::move(d), term);
}

MinimalResolution free_resolution(const FPModule& m, std::size_t length) {
  auto cache = m.cache();
  std::shared_ptr<const MinimalResolution> prior;
  {
    std::lock_guard<std::mutex> lock(cache->mutex);
    prior = cache->resolution;
  }
  if (prior && (prior->length() >= length || prior->terminated())) {
    if (prior->terminated() && prior->length() < length) {
      // Pad with zero modules.
      std::vector<FreeModule> f;
      std::vector<Matrix> d;
      for (std::size_t i = 0; i <= prior->length(); ++i) f.push_back(prior->free_module(i));
      for (std::size_t i = 1; i <= prior->length(); ++i) d.push_back(prior->matrix(i));
      const auto& ring = prior->module().ring();
      while (d.size() < length) {
        FreeModule zero{ring, {}};
        d.push_back(Matrix(ring->ambient(), f.back().rank(), 0));
        f.push_back(zero);
      }
      return MinimalResolution(prior->module(), std::move(f), std::move(d), true);
    }
    return prior->truncated(length);
  }

  const auto& ring = m.ring();
  std::vector<FreeModule> f;
  std::vector<Matrix> d;
  FPModule base = prior ? prior->module() : minimal_presentation(m);
  if (prior) {
    for (std::size_t i = 0; i <= prior->length(); ++i) f.push_back(prior->free_module(i));
    for (std::size_t i = 1; i <= prior->length(); ++i) d.push_back(prior->matrix(i));
  } else {
    f.push_back(FreeModule{ring, base.generator_shifts()});
  }
  bool terminated = false;
  while (d.size() < length) {
    const std::size_t i = d.size() + 1;  // computing d_i : F_i -> F_{i-1}
    if (f.back().rank() == 0) {
      terminated = true;
      d.push_back(Matrix(ring->ambient(), 0, 0));
      f.push_back(FreeModule{ring, {}});
      continue;
    }
    if (i == 1) {
      d.push_back(base.presentation().ring() ? base.presentation() : Matrix(ring->ambient(), f[0].rank(), 0));
      f.push_back(FreeModule{ring, base.relation_shifts()});
      continue;
    }
    const Matrix& prev = d.back();
    GradedGenerators s = syzygy_basis(prev, ring, f[f.size() - 2].shifts, f.back().shifts);
    d.push_back(Matrix::from_columns(ring->ambient(), f.back().rank(), s.vectors));
    f.push_back(FreeModule{ring, s.degrees});
  }
  for (const auto& fm : f)
    if (fm.rank() == 0) terminated = true;
  auto res = std::make_shared<const MinimalResolution>(base, f, d, terminated);
  if (audit::enabled()) audit::record_resolution(res->verify());
  {
    std::lock_guard<std::mutex> lock(cache->mutex);
    if (!cache->resolution || cache->resolution->length() < res->length()) cache->resolution = res;
  }
  return *res;
}

FPModule syzygy(const FPModule& m, std::size_t i) {
  if (i == 0) return minimal_presentation(m);
  MinimalResolution res = free_resolution(m, i + 1);
  const FreeModule& fi = res.free_module(i);
  const FreeModule& fi1 = res.free_module(i + 1);
  Matrix p = res.matrix(i + 1);
  if (!p.ring()) p = Matrix(m.ring()->ambient(), fi.rank(), fi1.rank());
  return FPModule(m.ring(), p, fi.shifts, fi1.shifts);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

KoszulComplex::KoszulComplex(std::vector<Polynomial> sequence, FPModule module)
    : sequence_(std::move(sequence)), module_(std::move(module)) {
  const auto& ring = module_.ring();
  const std::size_t n = sequence_.size();
  for (const auto& x : sequence_) {
    if (!x.is_homogeneous()) throw HomogeneityError("Koszul sequence element " + x.to_string() + " is not homogeneous");
    if (!ring->reduce(x).is_zero() && x.degree() == 0)
      throw PreconditionError("Koszul sequence element " + x.to_string() + " is not in the maximal ideal");
  }
  const std::size_t g = module_.num_generators();
  std::vector<std::vector<std::vector<std::size_t>>> subsets(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    subsets[i] = subsets_of_size(n, i);
    std::vector<FPModule> parts;
    for (const auto& s : subsets[i]) {
      int deg = 0;
      for (std::size_t v : s) deg += sequence_[v].is_zero() ? 0 : sequence_[v].degree();
      parts.push_back(twist(module_, -deg));
    }
    terms_.push_back(direct_sum(parts, ring));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    Matrix mat(ring->ambient(), subsets[i - 1].size() * g, subsets[i].size() * g);
    for (std::size_t c = 0; c < subsets[i].size(); ++c) {
      const auto& s = subsets[i][c];
      for (std::size_t k = 0; k < s.size(); ++k) {
        std::vector<std::size_t> t = s;
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(k));
        std::size_t r = static_cast<std::size_t>(
            std::find(subsets[i - 1].begin(), subsets[i - 1].end(), t) - subsets[i - 1].begin());
        Polynomial entry = (k % 2 == 0) ? sequence_[s[k]] : -sequence_[s[k]];
        for (std::size_t j = 0; j < g; ++j) mat(r * g + j, c * g + j) = entry;
      }
    }
    differentials_.push_back(ModuleHom{terms_[i], terms_[i - 1], mat});
  }
}

FPModule KoszulComplex::homology(std::size_t i) const {
  const auto& ring = module_.ring();
  FPModule zero = FPModule::zero(ring);
  ModuleHom in = i + 1 <= length() ? differentials_[i] : ModuleHom::zero(zero, terms_.at(i));
  ModuleHom out = i >= 1 ? differentials_[i - 1] : ModuleHom::zero(terms_.at(0), zero);
  return syz::homology(in, out);
}

bool KoszulComplex::verify() const {
  for (std::size_t i = 1; i < length(); ++i) {
    Matrix prod = differentials_[i - 1].matrix * differentials_[i].matrix;
    for (std::size_t c = 0; c < prod.cols(); ++c)
      if (!terms_[i - 1].is_zero_element(prod.column(c))) return false;
  }
  return true;
}

KoszulComplex koszul_complex(const std::vector<Polynomial>& x, const FPModule& m) { return KoszulComplex(x, m); }

// ---------------------------------------------------------------------------
// Linear-algebra oracle

namespace {

/// R_d = A_d / I_d via row echelon form of the degree-d Macaulay matrix.
class GradedPieces {
 public:
  explicit GradedPieces(QuotientRingPtr ring) : ring_(std::move(ring)) {}

  struct Piece {
    std::vector<Monomial> monomials;
    std::unordered_map<Monomial, std::size_t> index;
    DenseMatrix echelon;  // rows of I_d in reduced echelon form
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> basis;        // non-pivot monomial positions
    std::vector<long> position_in_basis;  // -1 for pivots
  };

  const Piece& piece(int d) {
    auto it = pieces_.find(d);
    if (it != pieces_.end()) return it->second;
    Piece p;
    const Field f = ring_->field();
    p.monomials = d < 0 ? std::vector<Monomial>{} : monomials_of_degree(*ring_->ambient(), d);
    for (std::size_t k = 0; k < p.monomials.size(); ++k) p.index.emplace(p.monomials[k], k);
    std::vector<std::vector<Scalar>> rows;
    for (const auto& g : ring_->generators()) {
      if (g.is_zero() || g.degree() > d) continue;
      for (const auto& mono : monomials_of_degree(*ring_->ambient(), d - g.degree())) {
        std::vector<Scalar> row(p.monomials.size(), Scalar::zero(f));
        for (const auto& t : g.terms()) row[p.index.at(t.mono * mono)] += t.coeff;
        rows.push_back(std::move(row));
      }
    }
    DenseMatrix m(f, rows.size(), p.monomials.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < p.monomials.size(); ++c) m(r, c) = rows[r][c];
    RowEchelon e = row_reduce(m);
    p.echelon = std::move(e.reduced);
    p.pivots = e.pivot_cols;
    p.position_in_basis.assign(p.monomials.size(), -1);
    std::vector<bool> is_pivot(p.monomials.size(), false);
    for (std::size_t c : p.pivots) is_pivot[c] = true;
    for (std::size_t c = 0; c < p.monomials.size(); ++c)
      if (!is_pivot[c]) {
        p.position_in_basis[c] = static_cast<long>(p.basis.size());
        p.basis.push_back(c);
      }
    return pieces_.emplace(d, std::move(p)).first->second;
  }

  std::size_t dim(int d) { return piece(d).basis.size(); }

  /// Coordinates of the class of p (homogeneous of degree d) in R_d.
  std::vector<Scalar> coords(const Polynomial& poly, int d) {
    const Piece& p = piece(d);
    const Field f = ring_->field();
    std::vector<Scalar> full(p.monomials.size(), Scalar::zero(f));
    for (const auto& t : poly.terms()) full[p.index.at(t.mono)] += t.coeff;
    for (std::size_t k = 0; k < p.pivots.size(); ++k) {
      Scalar c = full[p.pivots[k]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < p.monomials.size(); ++j)
        if (!p.echelon(k, j).is_zero()) full[j] -= c * p.echelon(k, j);
    }
    std::vector<Scalar> out;
    out.reserve(p.basis.size());
    for (std::size_t c : p.basis) out.push_back(full[c]);
    return out;
  }

  Polynomial poly(const std::vector<Scalar>& coords, int d) {
    const Piece& p = piece(d);
    std::vector<Term> terms;
    for (std::size_t k = 0; k < p.basis.size(); ++k)
      if (!coords[k].is_zero()) terms.push_back(Term{coords[k], p.monomials[p.basis[k]]});
    return Polynomial(ring_->ambient(), std::move(terms));
  }

  const QuotientRingPtr& ring() const { return ring_; }

 private:
  QuotientRingPtr ring_;
  std::map<int, Piece> pieces_;
};

/// Degree-d part of a graded free module in coordinates.
struct FreeCoords {
  GradedPieces* pieces;
  std::vector<int> shifts;

  std::size_t dim(int d) const {
    std::size_t n = 0;
    for (int s : shifts) n += pieces->dim(d - s);
    return n;
  }
  std::vector<Scalar> coords(const ModuleVector& v, int d) const {
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < shifts.size(); ++i) {
      auto c = pieces->coords(v[i], d - shifts[i]);
      out.insert(out.end(), c.begin(), c.end());
    }
    return out;
  }
  ModuleVector vector(const std::vector<Scalar>& c, int d) const {
    ModuleVector out;
    std::size_t pos = 0;
    for (int s : shifts) {
      std::size_t n = pieces->dim(d - s);
      std::vector<Scalar> part(c.begin() + static_cast<std::ptrdiff_t>(pos),
                               c.begin() + static_cast<std::ptrdiff_t>(pos + n));
      out.push_back(pieces->poly(part, d - s));
      pos += n;
    }
    return out;
  }
};

using Subspace = std::vector<std::vector<Scalar>>;  // spanning rows

DenseMatrix rows_matrix(const Field& f, const Subspace& rows, std::size_t width) {
  DenseMatrix m(f, rows.size(), width);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < width; ++c) m(r, c) = rows[r][c];
  return m;
}

/// Echelon basis of the span.
Subspace span_basis(const Field& f, const Subspace& rows, std::size_t width) {
  if (rows.empty() || width == 0) return {};
  RowEchelon e = row_reduce(rows_matrix(f, rows, width));
  Subspace out;
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
    std::vector<Scalar> r(width);
    for (std::size_t c = 0; c < width; ++c) r[c] = e.reduced(k, c);
    out.push_back(std::move(r));
  }
  return out;
}

/// Vectors of `target` (a basis) extending span(`base`) to span(base + target),
/// taken greedily in order.
Subspace extend_basis(const Field& f, Subspace base, const Subspace& target, std::size_t width) {
  Subspace chosen;
  std::size_t r = base.empty() ? 0 : rank(rows_matrix(f, base, width));
  for (const auto& v : target) {
    base.push_back(v);
    std::size_t nr = rank(rows_matrix(f, base, width));
    if (nr > r) {
      chosen.push_back(v);
      r = nr;
    } else {
      base.pop_back();
    }
  }
  return chosen;
}

}  // namespace

BettiTable truncated_linear_resolution(const FPModule& m, std::size_t length, int degree_bound) {
  const auto& ring = m.ring();
  const Field f = ring->field();
  GradedPieces pieces(ring);
  BettiTable table(length + 1);
  if (m.num_generators() == 0) return table;
  const int dmin = *std::min_element(m.generator_shifts().begin(), m.generator_shifts().end());
  const auto& weights = ring->weights();
  const std::size_t nvars = ring->num_variables();

  // Current target free module, its relation subspaces P_d, and K_d (the
  // submodule to be generated).
  FreeCoords target{&pieces, m.generator_shifts()};
  std::map<int, Subspace> relations, wanted;
  for (int d = dmin; d <= degree_bound; ++d) {
    Subspace rel;
    const Matrix& p = m.presentation();
    for (std::size_t c = 0; c < p.cols(); ++c) {
      int deg = m.relation_shifts()[c];
      if (deg > d) continue;
      for (const auto& mono : monomials_of_degree(*ring->ambient(), d - deg)) {
        ModuleVector v = p.column(c);
        for (auto& e : v) e = e.times_monomial(Scalar::one(f), mono);
        rel.push_back(target.coords(v, d));
      }
    }
    relations[d] = span_basis(f, rel, target.dim(d));
    Subspace all;
    for (std::size_t k = 0; k < target.dim(d); ++k) {
      std::vector<Scalar> e(target.dim(d), Scalar::zero(f));
      e[k] = Scalar::one(f);
      all.push_back(std::move(e));
    }
    wanted[d] = std::move(all);
  }

  for (std::size_t step = 0; step <= length; ++step) {
    // Minimal generators of `wanted` modulo `relations`, degree by degree.
    std::map<int, Subspace> generated;  // relations + submodule of chosen generators
    std::vector<ModuleVector> gens;
    std::vector<int> gen_deg;
    for (int d = dmin; d <= degree_bound; ++d) {
      const std::size_t width = target.dim(d);
      Subspace w = relations[d];
      for (std::size_t v = 0; v < nvars; ++v) {
        int lower = d - weights[v];
        if (lower < dmin) continue;
        for (const auto& row : generated[lower]) {
          ModuleVector vec = target.vector(row, lower);
          for (auto& e : vec) e = e * ring->var(v);
          w.push_back(target.coords(vec, d));
        }
      }
      w = span_basis(f, w, width);
      Subspace fresh = extend_basis(f, w, span_basis(f, wanted[d], width), width);
      for (const auto& row : fresh) {
        gens.push_back(target.vector(row, d));
        gen_deg.push_back(d);
        w.push_back(row);
        ++table[step][d];
      }
      generated[d] = span_basis(f, w, width);
    }
    if (step == length || gens.empty()) break;

    // Kernel of the new free module onto target / relations.
    FreeCoords source{&pieces, gen_deg};
    std::map<int, Subspace> next_wanted;
    for (int d = dmin; d <= degree_bound; ++d) {
      const std::size_t sw = source.dim(d), tw = target.dim(d);
      if (sw == 0) continue;
      const Subspace& rel = relations[d];
      // Columns: images of the source basis, then the relation basis.
      DenseMatrix a(f, tw, sw + rel.size());
      for (std::size_t k = 0; k < sw; ++k) {
        std::vector<Scalar> e(sw, Scalar::zero(f));
        e[k] = Scalar::one(f);
        ModuleVector sv = source.vector(e, d);
        ModuleVector img(target.shifts.size(), Polynomial(ring->ambient()));
        for (std::size_t g = 0; g < gens.size(); ++g)
          if (!sv[g].is_zero())
            for (std::size_t i = 0; i < img.size(); ++i) img[i] += sv[g] * gens[g][i];
        auto c = target.coords(img, d);
        for (std::size_t r = 0; r < tw; ++r) a(r, k) = c[r];
      }
      for (std::size_t k = 0; k < rel.size(); ++k)
        for (std::size_t r = 0; r < tw; ++r) a(r, sw + k) = rel[k][r];
      Subspace ker;
      for (const auto& v : kernel(a)) ker.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(sw));
      next_wanted[d] = span_basis(f, ker, sw);
    }
    target = source;
    wanted = std::move(next_wanted);
    relations.clear();
  }
  return table;
}

BettiTable truncate_table(const BettiTable& t, std::size_t length, int degree_bound) {
  BettiTable out(std::min(t.size(), length + 1));
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& [d, n] : t[i])
      if (d <= degree_bound && n > 0) out[i][d] = n;
  out.resize(length + 1);
  return out;
}

std::string betti_table_to_string(const BettiTable& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    out << i << ":";
    for (const auto& [d, n] : t[i]) out << " " << n << "@" << d;
    out << "\n";
  }
  return out.str();
}

}  // namespace syz
