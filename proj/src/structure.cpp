#include "syzygy/structure.hpp"

#include "syzygy/errors.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace syz {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::proved_yes:
      return "proved-yes";
    case Verdict::proved_no:
      return "proved-no";
    case Verdict::not_found:
      return "not-found";
  }
  return "";
}

DenseMatrix constant_part(const Matrix& m, const Field& field) {
  DenseMatrix out(field, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out(i, j) = m(i, j).constant_coefficient();
  return out;
}

namespace {

ModuleVector unit_vec(const QuotientRingPtr& ring, std::size_t rank, std::size_t i) {
  ModuleVector v(rank, Polynomial(ring->ambient()));
  v[i] = ring->constant(1);
  return v;
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  if (f.is_prime()) return Scalar(f, static_cast<long long>(rng() % f.characteristic));
  return Scalar(f, static_cast<long long>(rng() % 41) - 20);
}

Polynomial constant_poly(const QuotientRingPtr& ring, const Scalar& c) {
  return Polynomial::constant(ring->ambient(), c);
}

FPModule ensure_minimal(const FPModule& m) { return m.is_minimal() ? m : minimal_presentation(m); }

/// Row-echelon span of flattened vectors, grown one vector at a time.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(Field f) : field_(f) {}

  /// Reduces v against the span; true and stored if it was independent.
  bool add(std::vector<Scalar> v) {
    reduce(v);
    auto it = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (it == v.end()) return false;
    std::size_t p = static_cast<std::size_t>(it - v.begin());
    Scalar inv = v[p].inverse();
    for (auto& s : v) s *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  bool contains(std::vector<Scalar> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
  }

  std::size_t dimension() const { return rows_.size(); }

 private:
  void reduce(std::vector<Scalar>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Scalar c = v[pivots_[r]];
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!rows_[r][k].is_zero()) v[k] -= c * rows_[r][k];
    }
  }

  Field field_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<Scalar> flatten(const DenseMatrix& m) {
  std::vector<Scalar> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

struct Piece {
  Matrix map;
  DenseMatrix constant;
  int degree = 0;
};

/// Homogeneous maps a -> b whose constant parts span every constant part a
/// homomorphism a -> b can have.
std::vector<Piece> constant_spanning_maps(const FPModule& a, const FPModule& b) {
  std::set<int> degrees;
  for (int sa : a.generator_shifts())
    for (int sb : b.generator_shifts()) degrees.insert(sb - sa);
  const Field field = a.ring()->field();
  IncrementalSpan span(field);
  std::vector<Piece> out;
  for (int d : degrees) {
    HomSpace h = hom_component(a, b, d);
    for (const auto& mat : h.basis) {
      DenseMatrix c = constant_part(mat, field);
      if (c.is_zero()) continue;
      if (span.add(flatten(c))) out.push_back(Piece{mat, c, d});
    }
  }
  return out;
}

std::string join_ints(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

std::vector<std::size_t> generator_degree_counts(const FPModule& m, int lo, int hi) {
  std::vector<std::size_t> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (int s : m.generator_shifts()) ++out[static_cast<std::size_t>(s - lo)];
  return out;
}

/// Total Betti numbers through F_3; a mismatch rules out an isomorphism.
bool betti_numbers_differ(const FPModule& m, const FPModule& n) {
  if (m.num_generators() > 8) return false;
  return free_resolution(m, 3).betti() != free_resolution(n, 3).betti();
}

}  // namespace

// ---------------------------------------------------------------------------

bool SplitCertificate::verify() const {
  const FPModule& m = f.source;
  if (m.num_generators() == 0) return true;
  if (!m.is_minimal()) return false;
  if (!f.is_well_defined() || !g.is_well_defined()) return false;
  if (!g.source.ring()->same_as(*m.ring())) return false;
  if (g.target.num_generators() != m.num_generators()) return false;
  Matrix comp = g.matrix * f.matrix;
  if (!(comp == composite)) return false;
  DenseMatrix c = constant_part(comp, m.ring()->field());
  if (!(c == composite_constant_part)) return false;
  if (!inverse(c)) return false;
  if (graded) {
    std::vector<int> rel = m.relation_shifts();
    rel.insert(rel.end(), m.generator_shifts().begin(), m.generator_shifts().end());
    FPModule q(m.ring(), m.presentation().hconcat(comp), m.generator_shifts(), rel);
    if (!q.is_zero()) return false;
  }
  return true;
}

SplitReport split_summand(const FPModule& m0, const FPModule& n0, std::size_t trials, std::uint64_t seed) {
  require_same_ring(*m0.ring(), *n0.ring());
  SplitReport rep;
  rep.seed = seed;
  const auto& ring = m0.ring();
  const Field field = ring->field();
  FPModule m = ensure_minimal(m0);
  FPModule n = ensure_minimal(n0);
  const std::size_t nm = m.num_generators(), nn = n.num_generators();

  if (nm == 0) {
    SplitCertificate c{ModuleHom::zero(m, n), ModuleHom::zero(n, m), Matrix(ring->ambient(), 0, 0),
                       DenseMatrix(field, 0, 0), {}, {}, true};
    rep.verdict = Verdict::proved_yes;
    rep.certificate = c;
    return rep;
  }
  if (nm > nn) {
    rep.verdict = Verdict::proved_no;
    rep.obstruction = "nu(M) = " + std::to_string(nm) + " > nu(N) = " + std::to_string(nn);
    return rep;
  }
  if (m.num_relations() > n.num_relations()) {
    rep.verdict = Verdict::proved_no;
    rep.obstruction = "beta_1(M) = " + std::to_string(m.num_relations()) + " > beta_1(N) = " +
                      std::to_string(n.num_relations());
    return rep;
  }

  std::vector<Piece> fs = constant_spanning_maps(m, n);
  std::vector<Piece> gs = constant_spanning_maps(n, m);
  if (fs.empty() || gs.empty()) {
    rep.verdict = Verdict::proved_no;
    rep.obstruction = fs.empty() ? "every map M -> N sends M into mN" : "every map N -> M lands in mM";
    return rep;
  }

  std::mt19937_64 rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    rep.trials_used = trial + 1;
    std::vector<Scalar> rf, rg;
    DenseMatrix x(field, nn, nm), y(field, nm, nn);
    for (const auto& p : fs) {
      rf.push_back(random_scalar(field, rng));
      x = x + p.constant.scaled(rf.back());
    }
    for (const auto& p : gs) {
      rg.push_back(random_scalar(field, rng));
      y = y + p.constant.scaled(rg.back());
    }
    if (determinant(y * x).is_zero()) continue;

    Matrix fm(ring->ambient(), nn, nm), gm(ring->ambient(), nm, nn);
    std::set<int> fd, gd;
    for (std::size_t a = 0; a < fs.size(); ++a)
      if (!rf[a].is_zero()) {
        fm = fm + fs[a].map.scaled(constant_poly(ring, rf[a]));
        fd.insert(fs[a].degree);
      }
    for (std::size_t b = 0; b < gs.size(); ++b)
      if (!rg[b].is_zero()) {
        gm = gm + gs[b].map.scaled(constant_poly(ring, rg[b]));
        gd.insert(gs[b].degree);
      }
    SplitCertificate c{ModuleHom{m, n, fm}, ModuleHom{n, m, gm}, gm * fm, DenseMatrix(field, 0, 0), {fd.begin(), fd.end()},
                       {gd.begin(), gd.end()}, false};
    c.composite_constant_part = constant_part(c.composite, field);
    c.graded = fd == std::set<int>{0} && gd == std::set<int>{0};
    if (!c.verify()) continue;
    rep.verdict = Verdict::proved_yes;
    rep.certificate = std::move(c);
    return rep;
  }

  int lo = INT_MAX, hi = INT_MIN;
  for (int s : m.generator_shifts()) lo = std::min(lo, s), hi = std::max(hi, s);
  for (int s : n.generator_shifts()) lo = std::min(lo, s), hi = std::max(hi, s);
  rep.diagnostics.push_back("generators by degree from " + std::to_string(lo) + ": M " +
                            join_ints(generator_degree_counts(m, lo, hi)) + " / N " +
                            join_ints(generator_degree_counts(n, lo, hi)));
  rep.diagnostics.push_back("no split pair among " + std::to_string(rep.trials_used) + " random trials");
  return rep;
}

// ---------------------------------------------------------------------------

bool DecompositionCertificate::verify() const {
  if (first.is_zero() || second.is_zero()) return false;
  if (to_sum.source.num_generators() != module.num_generators()) return false;
  if (from_sum.target.num_generators() != module.num_generators()) return false;
  if (to_sum.target.num_generators() != first.num_generators() + second.num_generators()) return false;
  if (!to_sum.is_well_defined() || !from_sum.is_well_defined()) return false;
  const auto& amb = module.ring()->ambient();
  Matrix a = from_sum.matrix * to_sum.matrix - Matrix::identity(amb, module.num_generators());
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!module.is_zero_element(a.column(j))) return false;
  Matrix b = to_sum.matrix * from_sum.matrix - Matrix::identity(amb, to_sum.target.num_generators());
  for (std::size_t j = 0; j < b.cols(); ++j)
    if (!to_sum.target.is_zero_element(b.column(j))) return false;
  return true;
}

FPModule module_on_generators(const QuotientRingPtr& ring, const std::vector<int>& shifts,
                              const std::vector<ModuleVector>& vectors) {
  if (vectors.empty()) return FPModule::zero(ring);
  std::vector<int> degrees;
  for (const auto& v : vectors) {
    auto d = vector_degree(v, shifts);
    if (!d) throw PreconditionError("generator is zero or not homogeneous");
    degrees.push_back(*d);
  }
  Matrix m = Matrix::from_columns(ring->ambient(), shifts.size(), vectors);
  GradedGenerators rel = syzygy_basis(m, ring, shifts, degrees);
  Matrix p = Matrix::from_columns(ring->ambient(), vectors.size(), rel.vectors);
  return FPModule(ring, p, degrees, rel.degrees);
}

std::optional<DecompositionCertificate> internal_direct_sum(const QuotientRingPtr& ring,
                                                            const std::vector<int>& shifts,
                                                            const std::vector<ModuleVector>& a,
                                                            const std::vector<ModuleVector>& b) {
  auto nonzero = [&](const std::vector<ModuleVector>& vs) {
    std::vector<ModuleVector> out;
    for (auto v : vs) {
      for (auto& p : v) p = ring->reduce(p);
      if (std::any_of(v.begin(), v.end(), [](const Polynomial& p) { return !p.is_zero(); })) out.push_back(v);
    }
    return out;
  };
  std::vector<ModuleVector> va = nonzero(a), vb = nonzero(b);
  if (va.empty() || vb.empty()) return std::nullopt;
  std::vector<ModuleVector> all = va;
  all.insert(all.end(), vb.begin(), vb.end());
  FPModule m = module_on_generators(ring, shifts, all);
  FPModule fa = module_on_generators(ring, shifts, va);
  FPModule fb = module_on_generators(ring, shifts, vb);
  FPModule sum = direct_sum(fa, fb);
  Matrix id = Matrix::identity(ring->ambient(), all.size());
  DecompositionCertificate c{m, fa, fb, ModuleHom{m, sum, id}, ModuleHom{sum, m, id}};
  if (!c.verify()) return std::nullopt;
  return c;
}

// ---------------------------------------------------------------------------

namespace {

/// M_t for t between the extreme generator degrees. Degree-0 endomorphisms
/// act faithfully on it.
struct FinitePiece {
  std::vector<int> degrees;
  std::vector<std::vector<ModuleVector>> basis;
  std::vector<std::size_t> offset;
  std::size_t dim = 0;

  std::size_t block_of(int t) const {
    return static_cast<std::size_t>(std::find(degrees.begin(), degrees.end(), t) - degrees.begin());
  }
};

FinitePiece finite_piece(const FPModule& m) {
  FinitePiece v;
  const auto& s = m.generator_shifts();
  int lo = *std::min_element(s.begin(), s.end());
  int hi = *std::max_element(s.begin(), s.end());
  for (int t = lo; t <= hi; ++t) {
    v.degrees.push_back(t);
    v.offset.push_back(v.dim);
    v.basis.push_back(graded_basis(m, t));
    v.dim += v.basis.back().size();
  }
  return v;
}

DenseMatrix action(const FPModule& m, const FinitePiece& v, const Matrix& phi) {
  DenseMatrix out(m.ring()->field(), v.dim, v.dim);
  for (std::size_t k = 0; k < v.degrees.size(); ++k)
    for (std::size_t i = 0; i < v.basis[k].size(); ++i) {
      auto coords = graded_coordinates(m, v.degrees[k], phi.apply(v.basis[k][i]));
      for (std::size_t r = 0; r < coords.size(); ++r) out(v.offset[k] + r, v.offset[k] + i) = coords[r];
    }
  return out;
}

DenseMatrix matrix_power(DenseMatrix a, std::size_t e) {
  DenseMatrix out = DenseMatrix::identity(a.field(), a.rows());
  while (e) {
    if (e & 1) out = out * a;
    e >>= 1;
    if (e) a = a * a;
  }
  return out;
}

/// Degree-0 endomorphism acting on the generators as `e` acts on V.
Matrix endomorphism_from_action(const FPModule& m, const FinitePiece& v, const DenseMatrix& e) {
  const auto& ring = m.ring();
  const std::size_t g = m.num_generators();
  Matrix out(ring->ambient(), g, g);
  for (std::size_t j = 0; j < g; ++j) {
    int t = m.generator_shifts()[j];
    std::size_t k = v.block_of(t);
    auto coords = graded_coordinates(m, t, unit_vec(ring, g, j));
    for (std::size_t r = 0; r < coords.size(); ++r) {
      Scalar c = Scalar::zero(ring->field());
      for (std::size_t s = 0; s < coords.size(); ++s) c += e(v.offset[k] + r, v.offset[k] + s) * coords[s];
      if (c.is_zero()) continue;
      const ModuleVector& b = v.basis[k][r];
      for (std::size_t i = 0; i < g; ++i)
        if (!b[i].is_zero()) out(i, j) += b[i].scaled(c);
    }
  }
  return out;
}

/// Single eigenvalue with T - lambda nilpotent.
std::optional<Scalar> scalar_plus_nilpotent(const DenseMatrix& t, std::uint64_t seed) {
  auto roots = roots_in_field(characteristic_polynomial(t), seed);
  if (roots.size() != 1) return std::nullopt;
  DenseMatrix n = t - DenseMatrix::identity(t.field(), t.rows()).scaled(roots[0]);
  if (!matrix_power(n, t.rows()).is_zero()) return std::nullopt;
  return roots[0];
}

/// End_0 = k + N with N a nilpotent ideal.
bool is_local_algebra(const std::vector<DenseMatrix>& basis, std::uint64_t seed) {
  if (basis.empty()) return false;
  const Field field = basis.front().field();
  const std::size_t n = basis.front().rows();
  std::vector<DenseMatrix> nil;
  for (const auto& t : basis) {
    auto lambda = scalar_plus_nilpotent(t, seed);
    if (!lambda) return false;
    DenseMatrix r = t - DenseMatrix::identity(field, n).scaled(*lambda);
    if (!r.is_zero()) nil.push_back(r);
  }
  IncrementalSpan span(field);
  std::vector<DenseMatrix> nb;
  for (const auto& r : nil)
    if (span.add(flatten(r))) nb.push_back(r);
  for (const auto& a : nb)
    for (const auto& b : nb)
      if (!span.contains(flatten(a * b))) return false;
  std::vector<DenseMatrix> power = nb;
  for (std::size_t step = 0; step <= n && !power.empty(); ++step) {
    IncrementalSpan next_span(field);
    std::vector<DenseMatrix> next;
    for (const auto& p : power)
      for (const auto& b : nb) {
        DenseMatrix q = p * b;
        if (!q.is_zero() && next_span.add(flatten(q))) next.push_back(q);
      }
    power = std::move(next);
  }
  return power.empty();
}

std::optional<DenseMatrix> fitting_idempotent(const DenseMatrix& t, std::uint64_t seed) {
  auto roots = roots_in_field(characteristic_polynomial(t), seed);
  if (roots.size() < 2) return std::nullopt;
  const Field field = t.field();
  const std::size_t n = t.rows();
  DenseMatrix s = matrix_power(t - DenseMatrix::identity(field, n).scaled(roots[0]), n);
  auto ker = kernel(s);
  RowEchelon ech = row_reduce(s);
  if (ker.empty() || ech.pivot_cols.empty()) return std::nullopt;
  DenseMatrix b(field, n, n);
  std::size_t col = 0;
  for (const auto& k : ker) {
    for (std::size_t r = 0; r < n; ++r) b(r, col) = k[r];
    ++col;
  }
  for (std::size_t pc : ech.pivot_cols) {
    for (std::size_t r = 0; r < n; ++r) b(r, col) = s(r, pc);
    ++col;
  }
  if (col != n) return std::nullopt;
  auto binv = inverse(b);
  if (!binv) return std::nullopt;
  DenseMatrix d(field, n, n);
  for (std::size_t i = 0; i < ker.size(); ++i) d(i, i) = Scalar::one(field);
  return b * d * *binv;
}

std::optional<DecompositionCertificate> split_by_idempotent(const FPModule& m, const Matrix& e) {
  const auto& ring = m.ring();
  const std::size_t g = m.num_generators();
  Matrix id = Matrix::identity(ring->ambient(), g);
  Matrix ie = id - e;
  std::vector<int> rel = m.relation_shifts();
  rel.insert(rel.end(), m.generator_shifts().begin(), m.generator_shifts().end());
  FPModule a(ring, m.presentation().hconcat(ie), m.generator_shifts(), rel);
  FPModule b(ring, m.presentation().hconcat(e), m.generator_shifts(), rel);
  FPModule sum = direct_sum(a, b);
  DecompositionCertificate c{m, a, b, ModuleHom{m, sum, id.vconcat(id)}, ModuleHom{sum, m, e.hconcat(ie)}};
  if (!c.verify()) return std::nullopt;
  return c;
}

}  // namespace

DecomposeReport decompose(const FPModule& m0, std::size_t trials, std::uint64_t seed) {
  if (m0.is_zero()) throw ZeroModuleError("decompose needs a nonzero module");
  DecomposeReport rep;
  rep.seed = seed;
  FPModule m = ensure_minimal(m0);
  HomSpace end0 = hom_component(m, m, 0);
  rep.endomorphism_dimension = end0.dimension();
  if (end0.dimension() <= 1) {
    rep.verdict = Verdict::proved_no;
    rep.reason = "degree-0 endomorphisms are the scalars";
    return rep;
  }
  FinitePiece v = finite_piece(m);
  std::vector<DenseMatrix> acts;
  for (const auto& b : end0.basis) acts.push_back(action(m, v, b));
  const Field field = m.ring()->field();

  auto attempt = [&](const std::vector<Scalar>& coeffs) -> bool {
    DenseMatrix t(field, v.dim, v.dim);
    for (std::size_t i = 0; i < acts.size(); ++i)
      if (!coeffs[i].is_zero()) t = t + acts[i].scaled(coeffs[i]);
    auto e = fitting_idempotent(t, seed);
    if (!e) return false;
    auto cert = split_by_idempotent(m, endomorphism_from_action(m, v, *e));
    if (!cert) return false;
    rep.verdict = Verdict::proved_yes;
    rep.certificate = std::move(cert);
    rep.reason = "Fitting idempotent of a degree-0 endomorphism";
    return true;
  };

  const std::size_t dim = acts.size();
  if (dim <= 4) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) total *= 3;
    for (std::size_t code = 1; code < total; ++code) {
      std::vector<Scalar> c;
      for (std::size_t i = 0, x = code; i < dim; ++i, x /= 3) c.push_back(Scalar(field, static_cast<long long>(x % 3)));
      if (attempt(c)) return rep;
    }
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
      std::vector<Scalar> c;
      for (std::size_t i = 0; i < dim; ++i) c.push_back(random_scalar(field, rng));
      if (attempt(c)) return rep;
    }
  }
  if (v.dim <= 64 && is_local_algebra(acts, seed)) {
    rep.verdict = Verdict::proved_no;
    rep.reason = "degree-0 endomorphism ring is local";
    return rep;
  }
  rep.reason = "no nontrivial idempotent found";
  return rep;
}

DecomposeReport decompose_maximal_ideal(const QuotientRingPtr& ring, std::size_t trials, std::uint64_t seed) {
  FPModule mm = FPModule::maximal_ideal(ring);
  if (mm.is_zero()) throw ZeroModuleError("the maximal ideal is zero");
  std::size_t d = depth(ring);
  if (d >= 2) {
    DecomposeReport rep;
    rep.seed = seed;
    rep.verdict = Verdict::proved_no;
    rep.reason = "depth R = " + std::to_string(d) + " >= 2, while a decomposable maximal ideal forces depth <= 1";
    return rep;
  }
  return decompose(mm, trials, seed);
}

// ---------------------------------------------------------------------------

IsomorphismReport is_isomorphic(const FPModule& m0, const FPModule& n0, std::size_t trials, std::uint64_t seed) {
  require_same_ring(*m0.ring(), *n0.ring());
  IsomorphismReport rep;
  rep.seed = seed;
  FPModule m = ensure_minimal(m0), n = ensure_minimal(n0);
  auto refuse = [&](std::string why) {
    rep.verdict = Verdict::proved_no;
    rep.reason = std::move(why);
    return rep;
  };
  if (m.num_generators() != n.num_generators())
    return refuse("nu differs: " + std::to_string(m.num_generators()) + " vs " + std::to_string(n.num_generators()));
  if (m.num_relations() != n.num_relations())
    return refuse("beta_1 differs: " + std::to_string(m.num_relations()) + " vs " +
                  std::to_string(n.num_relations()));
  if (m.num_generators() == 0) {
    rep.verdict = Verdict::proved_yes;
    rep.reason = "both zero";
    return rep;
  }
  if (krull_dimension(m) != krull_dimension(n)) return refuse("Krull dimensions differ");
  if (m.num_generators() <= 6 && !ideals_equal(m.ring(), annihilator(m), annihilator(n)))
    return refuse("annihilators differ");
  if (betti_numbers_differ(m, n)) return refuse("Betti numbers differ");

  SplitReport s = split_summand(m, n, trials, seed);
  if (s.verdict == Verdict::proved_yes) {
    rep.verdict = Verdict::proved_yes;
    rep.certificate = s.certificate;
    rep.reason = "split injection M -> N with nu(M) = nu(N)";
    return rep;
  }
  if (s.verdict == Verdict::proved_no) return refuse(s.obstruction);
  rep.reason = "no isomorphism found";
  return rep;
}

// ---------------------------------------------------------------------------

FiberProduct fiber_product(const QuotientRingPtr& s, const QuotientRingPtr& t, const std::string& label) {
  if (!(s->field() == t->field())) throw RingMismatchError("fiber product factors live over different fields");
  auto trivial = [](const QuotientRingPtr& r) {
    for (std::size_t i = 0; i < r->num_variables(); ++i)
      if (!r->is_zero(r->var(i))) return false;
    return true;
  };
  if (trivial(s) || trivial(t)) throw TrivialFactorError("a fiber product factor has zero maximal ideal");
  std::vector<std::string> vars = s->variables();
  std::vector<int> weights = s->weights();
  for (std::size_t i = 0; i < t->num_variables(); ++i) {
    if (std::find(vars.begin(), vars.end(), t->variables()[i]) != vars.end())
      throw PreconditionError("fiber product factors share the variable " + t->variables()[i]);
    vars.push_back(t->variables()[i]);
    weights.push_back(t->weights()[i]);
  }
  if (vars.size() > kMaxVariables) throw PreconditionError("too many variables");
  auto amb = std::make_shared<const PolyRing>(vars, weights, s->field());
  auto embed = [&](const Polynomial& p, std::size_t offset) {
    std::vector<Term> terms;
    for (const auto& tm : p.terms()) {
      Monomial::Exponents e{};
      for (std::size_t i = 0; i + offset < kMaxVariables; ++i)
        if (tm.mono[i]) e[i + offset] = tm.mono[i];
      terms.push_back(Term{tm.coeff, amb->monomial(e)});
    }
    return Polynomial(amb, std::move(terms));
  };
  std::vector<Polynomial> gens;
  for (const auto& g : s->generators()) gens.push_back(embed(g, 0));
  for (const auto& g : t->generators()) gens.push_back(embed(g, s->num_variables()));
  const std::size_t ns = s->num_variables();
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t j = ns; j < vars.size(); ++j)
      gens.push_back(Polynomial::variable(amb, i) * Polynomial::variable(amb, j));
  std::string name = label.empty() ? s->label() + "x" + t->label() : label;
  QuotientRingPtr r = make_quotient_ring(amb, gens, name);

  std::vector<ModuleVector> a, b;
  for (std::size_t i = 0; i < vars.size(); ++i) (i < ns ? a : b).push_back({r->var(i)});
  auto cert = internal_direct_sum(r, {0}, a, b);
  if (!cert) throw Error("internal: fiber product maximal ideal failed to split");
  return FiberProduct{r, *cert};
}

std::vector<Polynomial> determinantal_ideal_2x2(const Matrix& m) {
  if (m.rows() != 2) throw ShapeError("determinantal_ideal_2x2 needs a 2-row matrix");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      Polynomial p = m(0, i) * m(1, j) - m(0, j) * m(1, i);
      if (!p.is_homogeneous())
        throw HomogeneityError("minor of columns " + std::to_string(i) + "," + std::to_string(j) + " is " +
                               p.to_string() + ", not homogeneous");
      if (!p.is_zero()) out.push_back(p);
    }
  return out;
}

std::size_t embedding_dimension(const QuotientRingPtr& ring) {
  return minimal_number_of_generators(FPModule::maximal_ideal(ring));
}

bool is_dvr(const QuotientRingPtr& ring) { return embedding_dimension(ring) == 1 && krull_dimension(ring) == 1; }

MultiplicityReport minimal_multiplicity(const QuotientRingPtr& ring) {
  if (!ring->is_standard_graded()) throw UnsupportedGradingError("multiplicity needs the standard grading");
  MultiplicityReport rep;
  HilbertReport h = hilbert(FPModule::free(ring, {0}), HilbertMode::multiplicity);
  rep.multiplicity = h.multiplicity;
  rep.dimension = h.dimension;
  rep.embedding_dimension = embedding_dimension(ring);
  rep.holds = rep.multiplicity == static_cast<long long>(rep.embedding_dimension) - rep.dimension + 1;
  rep.cohen_macaulay = static_cast<int>(depth(ring)) == rep.dimension;
  if (!rep.cohen_macaulay) rep.note = "ring is not Cohen-Macaulay; the inequality need not apply";
  return rep;
}

QuasiDecomposableReport quasi_decomposable(const QuotientRingPtr& ring, const std::vector<Polynomial>& x,
                                           std::size_t trials, std::uint64_t seed) {
  QuasiDecomposableReport rep;
  rep.regular = is_regular_sequence(x, FPModule::free(ring, {0}));
  rep.ring_depth = depth(ring);
  rep.length_constraint_holds = x.size() == rep.ring_depth || x.size() + 1 == rep.ring_depth;
  if (!rep.regular.regular) {
    rep.verdict = Verdict::proved_no;
    rep.reason = "not a regular sequence: " + rep.regular.reason;
    return rep;
  }
  rep.quotient = x.empty() ? ring : quotient_by(ring, x, ring->label() + "/(x)");
  DecomposeReport d = decompose_maximal_ideal(rep.quotient, trials, seed);
  rep.verdict = d.verdict;
  rep.decomposition = d.certificate;
  rep.reason = d.reason;
  return rep;
}

}  // namespace syz
