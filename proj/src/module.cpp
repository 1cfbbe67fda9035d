#include "syzygy/module.hpp"

#include "syzygy/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace syz {

namespace {

bool entry_is_unit(const QuotientRing& ring, const Polynomial& p) { return ring.reduce(p).is_unit(); }

void enumerate_monomials(const PolyRing& ring, std::size_t var, int remaining, Monomial::Exponents& e,
                         std::vector<Monomial>& out) {
  const std::size_t n = ring.num_variables();
  if (var == n) {
    if (remaining == 0) out.push_back(ring.monomial(e));
    return;
  }
  const int w = ring.weights()[var];
  for (int k = remaining / w; k >= 0; --k) {
    e[var] = static_cast<std::uint16_t>(k);
    enumerate_monomials(ring, var + 1, remaining - k * w, e, out);
  }
  e[var] = 0;
}

/// Standard monomials of M in degree t as (component, monomial) pairs.
std::vector<std::pair<std::size_t, Monomial>> standard_monomials(const FPModule& m, int t) {
  std::vector<std::pair<std::size_t, Monomial>> out;
  if (m.num_generators() == 0) return out;
  const auto leading = m.relation_basis().leading_monomials();
  const PolyRing& amb = *m.ring()->ambient();
  for (std::size_t i = 0; i < m.num_generators(); ++i) {
    int d = t - m.generator_shifts()[i];
    if (d < 0) continue;
    for (const auto& mono : monomials_of_degree(amb, d)) {
      bool standard = std::none_of(leading[i].begin(), leading[i].end(),
                                   [&](const Monomial& l) { return l.divides(mono); });
      if (standard) out.emplace_back(i, mono);
    }
  }
  return out;
}

ModuleVector unit_vector(const QuotientRingPtr& ring, std::size_t rank, std::size_t i, const Monomial& mono) {
  ModuleVector v(rank, Polynomial(ring->ambient()));
  v[i] = Polynomial::monomial(ring->ambient(), Scalar::one(ring->field()), mono);
  return v;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const PolyRing& ring, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial::Exponents e{};
  enumerate_monomials(ring, 0, degree, e, out);
  return out;
}

// ---------------------------------------------------------------------------

void ModuleMap::validate() const {
  if (matrix.rows() != target.rank() || matrix.cols() != source.rank())
    throw ShapeError("module map matrix is " + std::to_string(matrix.rows()) + "x" +
                     std::to_string(matrix.cols()) + ", expected " + std::to_string(target.rank()) + "x" +
                     std::to_string(source.rank()));
  for (std::size_t c = 0; c < matrix.cols(); ++c)
    for (std::size_t r = 0; r < matrix.rows(); ++r)
      for (const auto& t : matrix(r, c).terms())
        if (t.mono.degree() + target.shifts[r] != source.shifts[c])
          throw HomogeneityError("module map entry (" + std::to_string(r) + "," + std::to_string(c) +
                                 ") is not of degree " + std::to_string(source.shifts[c] - target.shifts[r]));
}

FPModule::FPModule(QuotientRingPtr ring, Matrix presentation, std::vector<int> generator_shifts,
                   std::vector<int> relation_shifts)
    : ring_(std::move(ring)),
      presentation_(std::move(presentation)),
      generator_shifts_(std::move(generator_shifts)),
      relation_shifts_(std::move(relation_shifts)),
      cache_(std::make_shared<detail::ModuleCache>()) {
  if (presentation_.rows() == 0 && presentation_.cols() == 0 && !presentation_.ring())
    presentation_ = Matrix(ring_->ambient(), generator_shifts_.size(), relation_shifts_.size());
  ModuleMap{FreeModule{ring_, relation_shifts_}, FreeModule{ring_, generator_shifts_}, presentation_}.validate();
  minimal_ = true;
  for (std::size_t r = 0; r < presentation_.rows(); ++r)
    for (std::size_t c = 0; c < presentation_.cols(); ++c) {
      presentation_(r, c) = ring_->reduce(presentation_(r, c));
      if (presentation_(r, c).is_unit()) minimal_ = false;
    }
}

FPModule::FPModule(QuotientRingPtr ring, Matrix presentation, std::vector<int> generator_shifts)
    : FPModule([&] {
        std::vector<std::size_t> keep;
        std::vector<int> shifts;
        for (std::size_t c = 0; c < presentation.cols(); ++c) {
          ModuleVector col = presentation.column(c);
          for (auto& p : col) p = ring->reduce(p);
          if (auto d = vector_degree(col, generator_shifts)) {
            keep.push_back(c);
            shifts.push_back(*d);
          }
        }
        Matrix kept = presentation.rows() == 0 ? Matrix(ring->ambient(), 0, 0) : presentation.select_columns(keep);
        return FPModule(ring, kept, generator_shifts, shifts);
      }()) {}

FPModule FPModule::free(const QuotientRingPtr& ring, std::vector<int> shifts) {
  Matrix p(ring->ambient(), shifts.size(), 0);
  return FPModule(ring, p, std::move(shifts), {});
}

FPModule FPModule::zero(const QuotientRingPtr& ring) { return free(ring, {}); }

FPModule FPModule::cyclic(const QuotientRingPtr& ring, const std::vector<Polynomial>& ideal) {
  std::vector<Polynomial> gens;
  std::vector<int> shifts;
  for (const auto& g : ideal) {
    Polynomial r = ring->reduce(g);
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) throw HomogeneityError("ideal generator " + g.to_string() + " is not homogeneous");
    gens.push_back(r);
    shifts.push_back(r.degree());
  }
  Matrix p = Matrix::from_rows(ring->ambient(), {gens});
  if (gens.empty()) p = Matrix(ring->ambient(), 1, 0);
  return FPModule(ring, p, {0}, shifts);
}

FPModule FPModule::residue_field(const QuotientRingPtr& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->num_variables(); ++i) vars.push_back(ring->var(i));
  return cyclic(ring, vars);
}

FPModule FPModule::from_ideal(const QuotientRingPtr& ring, const std::vector<Polynomial>& ideal) {
  std::vector<ModuleVector> vecs;
  for (const auto& g : ideal) vecs.push_back({g});
  return image(ring, {0}, vecs);
}

FPModule FPModule::maximal_ideal(const QuotientRingPtr& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->num_variables(); ++i) vars.push_back(ring->var(i));
  return from_ideal(ring, vars);
}

FPModule FPModule::image(const QuotientRingPtr& ring, const std::vector<int>& shifts,
                         const std::vector<ModuleVector>& vectors) {
  GradedGenerators gens = minimal_generators(ring, shifts, vectors);
  if (gens.size() == 0) return zero(ring);
  Matrix m = Matrix::from_columns(ring->ambient(), shifts.size(), gens.vectors);
  GradedGenerators rel = syzygy_basis(m, ring, shifts, gens.degrees);
  Matrix p = Matrix::from_columns(ring->ambient(), gens.size(), rel.vectors);
  return FPModule(ring, p, gens.degrees, rel.degrees);
}

ModuleMap FPModule::presentation_map() const {
  return ModuleMap{FreeModule{ring_, relation_shifts_}, FreeModule{ring_, generator_shifts_}, presentation_};
}

const GroebnerBasis& FPModule::relation_basis() const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->relation_basis) {
    std::vector<ModuleVector> cols;
    for (std::size_t c = 0; c < presentation_.cols(); ++c) cols.push_back(presentation_.column(c));
    cache_->relation_basis = std::make_shared<const GroebnerBasis>(ring_, generator_shifts_, cols);
  }
  return *cache_->relation_basis;
}

ModuleVector FPModule::normal_form(const ModuleVector& v) const { return relation_basis().normal_form(v); }

bool FPModule::is_zero_element(const ModuleVector& v) const {
  if (num_generators() == 0) return true;
  ModuleVector n = normal_form(v);
  return std::all_of(n.begin(), n.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool FPModule::is_zero() const {
  for (std::size_t i = 0; i < num_generators(); ++i)
    if (!is_zero_element(unit_vector(ring_, num_generators(), i, Monomial{}))) return false;
  return true;
}

std::string FPModule::to_text(const std::string& name, const std::string& ring_name) const {
  std::ostringstream out;
  out << "module " << name << " over " << ring_name << " = coker " << presentation_.to_string();
  out << " shifts [";
  for (std::size_t i = 0; i < generator_shifts_.size(); ++i) out << (i ? "," : "") << generator_shifts_[i];
  out << "]";
  return out.str();
}

// ---------------------------------------------------------------------------

bool ModuleHom::is_well_defined() const {
  if (matrix.rows() != target.num_generators() || matrix.cols() != source.num_generators()) return false;
  const Matrix& p = source.presentation();
  for (std::size_t c = 0; c < p.cols(); ++c)
    if (!target.is_zero_element(matrix.apply(p.column(c)))) return false;
  return true;
}

ModuleHom ModuleHom::compose_after(const ModuleHom& first) const {
  return ModuleHom{first.source, target, matrix * first.matrix};
}

ModuleHom ModuleHom::identity(const FPModule& m) {
  return ModuleHom{m, m, Matrix::identity(m.ring()->ambient(), m.num_generators())};
}

ModuleHom ModuleHom::zero(const FPModule& m, const FPModule& n) {
  return ModuleHom{m, n, Matrix(m.ring()->ambient(), n.num_generators(), m.num_generators())};
}

// ---------------------------------------------------------------------------

FPModule minimal_presentation(const FPModule& m) {
  const auto& ring = m.ring();
  Matrix p = m.presentation();
  std::vector<int> gens = m.generator_shifts();
  std::vector<int> rels = m.relation_shifts();
  for (;;) {
    std::size_t pi = p.rows(), pj = p.cols();
    for (std::size_t j = 0; j < p.cols() && pi == p.rows(); ++j)
      for (std::size_t i = 0; i < p.rows(); ++i)
        if (entry_is_unit(*ring, p(i, j))) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == p.rows()) break;
    Scalar inv = ring->reduce(p(pi, pj)).constant_coefficient().inverse();
    for (std::size_t c = 0; c < p.cols(); ++c) {
      if (c == pj || p(pi, c).is_zero()) continue;
      Polynomial factor = p(pi, c).scaled(inv);
      for (std::size_t r = 0; r < p.rows(); ++r)
        if (!p(r, pj).is_zero()) p(r, c) = ring->reduce(p(r, c) - factor * p(r, pj));
    }
    std::vector<std::size_t> keep_rows, keep_cols;
    for (std::size_t r = 0; r < p.rows(); ++r)
      if (r != pi) keep_rows.push_back(r);
    for (std::size_t c = 0; c < p.cols(); ++c)
      if (c != pj) keep_cols.push_back(c);
    p = p.select_rows(keep_rows).select_columns(keep_cols);
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(pi));
    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(pj));
  }
  if (gens.empty()) return FPModule::zero(ring);
  std::vector<ModuleVector> cols;
  for (std::size_t c = 0; c < p.cols(); ++c) cols.push_back(p.column(c));
  GradedGenerators mg = minimal_generators(ring, gens, cols);
  Matrix q = Matrix::from_columns(ring->ambient(), gens.size(), mg.vectors);
  return FPModule(ring, q, gens, mg.degrees);
}

FPModule direct_sum(const FPModule& a, const FPModule& b) {
  require_same_ring(*a.ring(), *b.ring());
  std::vector<int> gens = a.generator_shifts(), rels = a.relation_shifts();
  gens.insert(gens.end(), b.generator_shifts().begin(), b.generator_shifts().end());
  rels.insert(rels.end(), b.relation_shifts().begin(), b.relation_shifts().end());
  Matrix pa = a.presentation(), pb = b.presentation();
  if (!pa.ring()) pa = Matrix(a.ring()->ambient(), 0, 0);
  if (!pb.ring()) pb = Matrix(b.ring()->ambient(), 0, 0);
  return FPModule(a.ring(), block_diagonal(pa, pb), gens, rels);
}

FPModule direct_sum(const std::vector<FPModule>& parts, const QuotientRingPtr& ring) {
  FPModule acc = FPModule::zero(ring);
  for (const auto& p : parts) acc = direct_sum(acc, p);
  return acc;
}

FPModule twist(const FPModule& m, int d) {
  std::vector<int> gens = m.generator_shifts(), rels = m.relation_shifts();
  for (auto& g : gens) g -= d;
  for (auto& r : rels) r -= d;
  return FPModule(m.ring(), m.presentation(), gens, rels);
}

FPModule homology(const ModuleHom& d_in, const ModuleHom& d_out) {
  const FPModule& a = d_in.source;
  const FPModule& b = d_in.target;
  const FPModule& c = d_out.target;
  const auto& ring = b.ring();
  require_same_ring(*a.ring(), *b.ring());
  require_same_ring(*b.ring(), *d_out.source.ring());
  require_same_ring(*b.ring(), *c.ring());
  if (d_out.source.num_generators() != b.num_generators())
    throw ShapeError("maps are not composable: middle modules have " + std::to_string(b.num_generators()) +
                     " and " + std::to_string(d_out.source.num_generators()) + " generators");
  if (d_in.matrix.rows() != b.num_generators() || d_in.matrix.cols() != a.num_generators() ||
      d_out.matrix.rows() != c.num_generators() || d_out.matrix.cols() != b.num_generators())
    throw ShapeError("map matrices do not match their modules");
  const std::size_t nb = b.num_generators();
  if (nb == 0) return FPModule::zero(ring);
  Matrix comp = d_out.matrix * d_in.matrix;
  for (std::size_t j = 0; j < comp.cols(); ++j)
    if (!c.is_zero_element(comp.column(j)))
      throw NotAComplexError("composite of the two maps is nonzero on generator " + std::to_string(j));

  // Kernel of F_B -> C.
  std::vector<ModuleVector> ker;
  std::vector<int> ker_deg;
  if (c.num_generators() == 0) {
    for (std::size_t i = 0; i < nb; ++i) ker.push_back(unit_vector(ring, nb, i, Monomial{}));
  } else {
    Matrix big = d_out.matrix.hconcat(c.presentation());
    std::vector<int> src = b.generator_shifts();
    src.insert(src.end(), c.relation_shifts().begin(), c.relation_shifts().end());
    GradedGenerators s = syzygy_basis(big, ring, c.generator_shifts(), src, false);
    for (const auto& v : s.vectors) ker.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(nb));
  }
  GradedGenerators k = minimal_generators(ring, b.generator_shifts(), ker);
  if (k.size() == 0) return FPModule::zero(ring);

  // Relations among the kernel generators modulo im(d_in) + relations of B.
  Matrix kmat = Matrix::from_columns(ring->ambient(), nb, k.vectors);
  Matrix big = kmat.hconcat(d_in.matrix).hconcat(b.presentation());
  std::vector<int> src = k.degrees;
  src.insert(src.end(), a.generator_shifts().begin(), a.generator_shifts().end());
  src.insert(src.end(), b.relation_shifts().begin(), b.relation_shifts().end());
  GradedGenerators s = syzygy_basis(big, ring, b.generator_shifts(), src, false);
  std::vector<ModuleVector> rels;
  for (const auto& v : s.vectors) rels.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k.size()));
  Matrix pres(ring->ambient(), k.size(), 0);
  std::vector<ModuleVector> nonzero;
  for (auto& r : rels)
    if (vector_degree(r, k.degrees)) nonzero.push_back(std::move(r));
  GradedGenerators rg = minimal_generators(ring, k.degrees, nonzero);
  pres = Matrix::from_columns(ring->ambient(), k.size(), rg.vectors);
  return minimal_presentation(FPModule(ring, pres, k.degrees, rg.degrees));
}

FPModule kernel(const ModuleHom& f) {
  return homology(ModuleHom::zero(FPModule::zero(f.source.ring()), f.source), f);
}

GradedGenerators kernel_generators(const ModuleHom& f) {
  const FPModule& a = f.source;
  const FPModule& c = f.target;
  const auto& ring = a.ring();
  const std::size_t na = a.num_generators();
  GradedGenerators out;
  if (na == 0) return out;
  std::vector<ModuleVector> ker;
  if (c.num_generators() == 0) {
    for (std::size_t i = 0; i < na; ++i) ker.push_back(unit_vector(ring, na, i, Monomial{}));
  } else {
    Matrix big = f.matrix.hconcat(c.presentation());
    std::vector<int> src = a.generator_shifts();
    src.insert(src.end(), c.relation_shifts().begin(), c.relation_shifts().end());
    GradedGenerators s = syzygy_basis(big, ring, c.generator_shifts(), src, false);
    for (const auto& v : s.vectors) ker.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(na));
  }
  GradedGenerators k = minimal_generators(ring, a.generator_shifts(), ker);
  for (std::size_t i = 0; i < k.size(); ++i)
    if (!a.is_zero_element(k.vectors[i])) {
      out.vectors.push_back(k.vectors[i]);
      out.degrees.push_back(k.degrees[i]);
    }
  return out;
}

FPModule cokernel(const ModuleHom& f) {
  return homology(f, ModuleHom::zero(f.target, FPModule::zero(f.target.ring())));
}

// ---------------------------------------------------------------------------

std::vector<ModuleVector> graded_basis(const FPModule& m, int t) {
  std::vector<ModuleVector> out;
  for (const auto& [i, mono] : standard_monomials(m, t))
    out.push_back(unit_vector(m.ring(), m.num_generators(), i, mono));
  return out;
}

std::vector<Scalar> graded_coordinates(const FPModule& m, int t, const ModuleVector& v) {
  auto basis = standard_monomials(m, t);
  std::vector<Scalar> out(basis.size(), Scalar::zero(m.ring()->field()));
  ModuleVector n = m.normal_form(v);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& [i, mono] = basis[k];
    for (const auto& term : n[i].terms())
      if (term.mono == mono) out[k] = term.coeff;
  }
  return out;
}

namespace {

/// Lookup from (component, monomial) to a basis index.
struct BasisIndex {
  std::vector<std::unordered_map<Monomial, std::size_t>> by_comp;
  std::size_t size = 0;

  BasisIndex(const FPModule& m, int t) : by_comp(m.num_generators()) {
    for (const auto& [i, mono] : standard_monomials(m, t)) by_comp[i].emplace(mono, size++);
  }
};

}  // namespace

HomSpace hom_component(const FPModule& m, const FPModule& n, int degree) {
  require_same_ring(*m.ring(), *n.ring());
  const auto& ring = m.ring();
  const Field field = ring->field();
  HomSpace out{m, n, degree, {}};
  const std::size_t gm = m.num_generators(), gn = n.num_generators();
  if (gm == 0 || gn == 0) return out;

  // Unknowns: coefficients of the image of generator j in N_{a_j + degree}.
  std::vector<std::vector<ModuleVector>> images(gm);
  std::vector<std::size_t> offset(gm + 1, 0);
  for (std::size_t j = 0; j < gm; ++j) {
    images[j] = graded_basis(n, m.generator_shifts()[j] + degree);
    offset[j + 1] = offset[j] + images[j].size();
  }
  const std::size_t unknowns = offset[gm];
  if (unknowns == 0) return out;

  const Matrix& p = m.presentation();
  std::vector<BasisIndex> rel_index;
  std::vector<std::size_t> row_offset(p.cols() + 1, 0);
  for (std::size_t c = 0; c < p.cols(); ++c) {
    rel_index.emplace_back(n, m.relation_shifts()[c] + degree);
    row_offset[c + 1] = row_offset[c] + rel_index.back().size;
  }
  DenseMatrix eq(field, row_offset[p.cols()], unknowns);
  for (std::size_t c = 0; c < p.cols(); ++c)
    for (std::size_t j = 0; j < gm; ++j) {
      if (p(j, c).is_zero()) continue;
      for (std::size_t k = 0; k < images[j].size(); ++k) {
        ModuleVector w = images[j][k];
        for (auto& e : w) e = e * p(j, c);
        ModuleVector nf = n.normal_form(w);
        for (std::size_t i = 0; i < gn; ++i)
          for (const auto& t : nf[i].terms()) {
            auto it = rel_index[c].by_comp[i].find(t.mono);
            if (it == rel_index[c].by_comp[i].end())
              throw Error("internal: normal form left the standard basis");
            eq(row_offset[c] + it->second, offset[j] + k) += t.coeff;
          }
      }
    }
  for (const auto& sol : kernel(eq)) {
    Matrix h(ring->ambient(), gn, gm);
    for (std::size_t j = 0; j < gm; ++j)
      for (std::size_t k = 0; k < images[j].size(); ++k) {
        const Scalar& c = sol[offset[j] + k];
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < gn; ++i)
          if (!images[j][k][i].is_zero()) h(i, j) += images[j][k][i].scaled(c);
      }
    out.basis.push_back(std::move(h));
  }
  return out;
}

HomSpace hom_space(const FPModule& m, const FPModule& n) {
  FPModule mm = m.is_minimal() ? m : minimal_presentation(m);
  FPModule nn = n.is_minimal() ? n : minimal_presentation(n);
  return hom_component(mm, nn, 0);
}

bool HomSpace::certify(std::size_t i) const { return ModuleHom{source, target, basis.at(i)}.is_well_defined(); }

// ---------------------------------------------------------------------------
// Hilbert data

namespace {

using MonoList = std::vector<Monomial>;

MonoList minimize_monomials(MonoList gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  MonoList out;
  for (const auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(g); });
    if (!redundant) out.push_back(g);
  }
  return out;
}

std::vector<long long> poly_sub_shifted(std::vector<long long> a, const std::vector<long long>& b, int shift) {
  if (a.size() < b.size() + static_cast<std::size_t>(shift)) a.resize(b.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + static_cast<std::size_t>(shift)] -= b[i];
  return a;
}

/// Numerator of the Hilbert series of S / (gens) over (1-t)^n, standard grading.
std::vector<long long> monomial_numerator(const MonoList& gens, std::span<const int> weights) {
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (g.is_one()) return {};
  MonoList rest(gens.begin(), gens.end() - 1);
  const Monomial& last = gens.back();
  MonoList colon;
  for (const auto& g : rest) colon.push_back(g.quotient(gcd(g, last, weights)));
  auto a = monomial_numerator(rest, weights);
  auto b = monomial_numerator(minimize_monomials(colon), weights);
  return poly_sub_shifted(a, b, last.degree());
}

int monomial_dimension(const MonoList& gens, std::size_t n) {
  for (const auto& g : gens)
    if (g.is_one()) return -1;
  int best = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    int size = __builtin_popcount(subset);
    if (size <= best) continue;
    bool ok = std::none_of(gens.begin(), gens.end(), [&](const Monomial& g) {
      for (std::size_t v = 0; v < n; ++v)
        if (g[v] > 0 && !(subset & (1u << v))) return false;
      return true;
    });
    if (ok) best = size;
  }
  return best;
}

}  // namespace

std::vector<long long> hilbert_function(const FPModule& m, int from, int to) {
  std::vector<long long> out;
  for (int t = from; t <= to; ++t) out.push_back(static_cast<long long>(standard_monomials(m, t).size()));
  return out;
}

int krull_dimension(const FPModule& m) {
  if (m.num_generators() == 0) return -1;
  const auto leading = m.relation_basis().leading_monomials();
  int d = -1;
  for (const auto& comp : leading) d = std::max(d, monomial_dimension(minimize_monomials(comp), m.ring()->num_variables()));
  return d;
}

int krull_dimension(const QuotientRingPtr& ring) { return krull_dimension(FPModule::free(ring, {0})); }

std::optional<long long> finite_length(const FPModule& m) {
  int d = krull_dimension(m);
  if (d > 0) return std::nullopt;
  if (d < 0) return 0;
  // Every component's standard monomials live below the pure powers in its
  // leading ideal.
  const auto leading = m.relation_basis().leading_monomials();
  const auto& weights = m.ring()->weights();
  long long total = 0;
  for (std::size_t i = 0; i < m.num_generators(); ++i) {
    int top = m.generator_shifts()[i];
    bool unit = false;
    for (std::size_t v = 0; v < m.ring()->num_variables(); ++v) {
      int best = -1;
      for (const auto& l : leading[i]) {
        if (l.is_one()) unit = true;
        bool pure = l[v] > 0;
        for (std::size_t u = 0; u < m.ring()->num_variables() && pure; ++u)
          if (u != v && l[u] > 0) pure = false;
        if (pure && (best < 0 || l[v] < best)) best = l[v];
      }
      if (best > 0) top += (best - 1) * weights[v];
    }
    if (unit) continue;
    for (int t = m.generator_shifts()[i]; t <= top; ++t) {
      for (const auto& [comp, mono] : standard_monomials(m, t))
        if (comp == i) ++total;
    }
  }
  return total;
}

HilbertReport hilbert(const FPModule& m, HilbertMode mode, int degree_bound) {
  HilbertReport rep;
  rep.mode = mode;
  rep.degree_bound = degree_bound;
  const auto& ring = m.ring();
  if ((mode == HilbertMode::dimension || mode == HilbertMode::multiplicity || mode == HilbertMode::series) &&
      !ring->is_standard_graded())
    throw UnsupportedGradingError("Hilbert series, dimension and multiplicity need standard weights; "
                                  "only truncated Hilbert functions are offered for weighted rings");
  int first = 0;
  if (m.num_generators() > 0) first = std::min(0, *std::min_element(m.generator_shifts().begin(), m.generator_shifts().end()));
  rep.first_degree = first;
  rep.function = hilbert_function(m, first, degree_bound);
  if (mode == HilbertMode::function_up_to) return rep;

  const std::size_t n = ring->num_variables();
  const auto leading = m.num_generators() ? m.relation_basis().leading_monomials() : std::vector<std::vector<Monomial>>{};
  int offset = 0;
  for (int s : m.generator_shifts()) offset = std::min(offset, s);
  std::vector<long long> total;
  for (std::size_t i = 0; i < m.num_generators(); ++i) {
    auto num = monomial_numerator(minimize_monomials(leading[i]), ring->weights());
    int shift = m.generator_shifts()[i] - offset;
    if (total.size() < num.size() + static_cast<std::size_t>(shift)) total.resize(num.size() + static_cast<std::size_t>(shift), 0);
    for (std::size_t k = 0; k < num.size(); ++k) total[k + static_cast<std::size_t>(shift)] += num[k];
  }
  while (!total.empty() && total.back() == 0) total.pop_back();
  rep.numerator_offset = offset;
  rep.numerator = total;
  rep.dimension = krull_dimension(m);
  if (mode == HilbertMode::series) return rep;
  // Divide by (1 - t) while the value at 1 vanishes.
  std::vector<long long> q = total;
  std::size_t divisions = 0;
  auto at_one = [](const std::vector<long long>& p) { return std::accumulate(p.begin(), p.end(), 0LL); };
  while (!q.empty() && at_one(q) == 0) {
    std::vector<long long> r(q.size() - 1, 0);
    long long acc = 0;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      acc += q[k];
      r[k] = acc;
    }
    q = std::move(r);
    ++divisions;
  }
  rep.multiplicity = q.empty() ? 0 : at_one(q);
  if (!q.empty() && static_cast<int>(n - divisions) != rep.dimension)
    throw Error("internal: Hilbert series pole order disagrees with the monomial dimension");
  return rep;
}

FPModule auslander_transpose(const FPModule& m) {
  FPModule mm = m.is_minimal() ? m : minimal_presentation(m);
  std::vector<int> gens, rels;
  for (int s : mm.relation_shifts()) gens.push_back(-s);
  for (int s : mm.generator_shifts()) rels.push_back(-s);
  Matrix pt = mm.presentation().transpose();
  if (!pt.ring()) pt = Matrix(m.ring()->ambient(), gens.size(), rels.size());
  return minimal_presentation(FPModule(m.ring(), pt, gens, rels));
}

std::vector<Polynomial> annihilator(const FPModule& m) {
  return cokernel_annihilator(m.presentation(), m.ring(), m.generator_shifts(), m.relation_shifts());
}

bool is_free(const FPModule& m) { return minimal_presentation(m).num_relations() == 0; }

std::size_t minimal_number_of_generators(const FPModule& m) {
  return m.is_minimal() ? m.num_generators() : minimal_presentation(m).num_generators();
}

FPModule quotient_module(const FPModule& m, const std::vector<Polynomial>& ideal) {
  const auto& ring = m.ring();
  std::vector<ModuleVector> cols;
  std::vector<int> rels = m.relation_shifts();
  for (std::size_t c = 0; c < m.presentation().cols(); ++c) cols.push_back(m.presentation().column(c));
  for (const auto& g : ideal) {
    Polynomial r = ring->reduce(g);
    if (r.is_zero()) continue;
    for (std::size_t i = 0; i < m.num_generators(); ++i) {
      ModuleVector v(m.num_generators(), Polynomial(ring->ambient()));
      v[i] = r;
      cols.push_back(v);
      rels.push_back(r.degree() + m.generator_shifts()[i]);
    }
  }
  Matrix p = Matrix::from_columns(ring->ambient(), m.num_generators(), cols);
  return FPModule(ring, p, m.generator_shifts(), rels);
}

}  // namespace syz
