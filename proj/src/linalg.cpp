#include "syzygy/linalg.hpp"

#include "syzygy/errors.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace syz {

DenseMatrix::DenseMatrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

DenseMatrix DenseMatrix::identity(const Field& field, std::size_t n) {
  DenseMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
  if (cols_ != o.rows_) throw ShapeError("dense product: inner dimensions differ");
  DenseMatrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) out(i, j) += a * o(k, j);
    }
  return out;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("dense sum: shapes differ");
  DenseMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("dense difference: shapes differ");
  DenseMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

DenseMatrix DenseMatrix::scaled(const Scalar& c) const {
  DenseMatrix out = *this;
  for (auto& x : out.data_) x *= c;
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

std::vector<Scalar> DenseMatrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw ShapeError("dense apply: vector length differs");
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool DenseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RowEchelon row_reduce(DenseMatrix m) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const DenseMatrix& m) { return row_reduce(m).pivot_cols.size(); }

std::vector<std::vector<Scalar>> kernel(const DenseMatrix& m) {
  RowEchelon e = row_reduce(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(f));
    v[free] = Scalar::one(f);
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) v[e.pivot_cols[k]] = -e.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const DenseMatrix& m, const std::vector<Scalar>& b) {
  if (b.size() != m.rows()) throw ShapeError("solve: right-hand side length differs");
  DenseMatrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  RowEchelon e = row_reduce(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  std::vector<Scalar> x(m.cols(), Scalar::zero(m.field()));
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) x[e.pivot_cols[k]] = e.reduced(k, m.cols());
  return x;
}

std::optional<DenseMatrix> inverse(const DenseMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  DenseMatrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(m.field());
  }
  RowEchelon e = row_reduce(std::move(aug));
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
  DenseMatrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Scalar determinant(DenseMatrix m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
  const Field f = m.field();
  Scalar det = Scalar::one(f);
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return Scalar::zero(f);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// Univariate helpers

UniPoly poly_trim(UniPoly f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
  return f;
}

Scalar poly_eval(const UniPoly& f, const Scalar& x) {
  if (f.empty()) return Scalar::zero(x.field());
  Scalar acc = f.back();
  for (std::size_t i = f.size() - 1; i-- > 0;) acc = acc * x + f[i];
  return acc;
}

namespace {

UniPoly poly_mul(const UniPoly& a, const UniPoly& b, const Field& f) {
  if (a.empty() || b.empty()) return {};
  UniPoly out(a.size() + b.size() - 1, Scalar::zero(f));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return poly_trim(std::move(out));
}

UniPoly poly_sub(UniPoly a, const UniPoly& b, const Field& f) {
  if (a.size() < b.size()) a.resize(b.size(), Scalar::zero(f));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return poly_trim(std::move(a));
}

/// Remainder of a modulo nonzero b; quotient written to q if given.
UniPoly poly_divmod(UniPoly a, const UniPoly& b, const Field& f, UniPoly* q = nullptr) {
  a = poly_trim(std::move(a));
  if (q) q->clear();
  if (a.size() < b.size()) return a;
  Scalar inv = b.back().inverse();
  UniPoly quot(a.size() - b.size() + 1, Scalar::zero(f));
  for (std::size_t i = a.size(); i-- >= b.size();) {
    Scalar c = a[i] * inv;
    std::size_t shift = i - (b.size() - 1);
    quot[shift] = c;
    if (!c.is_zero())
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    if (i == b.size() - 1) break;
  }
  if (q) *q = poly_trim(std::move(quot));
  a.resize(b.size() - 1);
  return poly_trim(std::move(a));
}

UniPoly poly_monic(UniPoly a) {
  if (a.empty()) return a;
  Scalar inv = a.back().inverse();
  for (auto& c : a) c *= inv;
  return a;
}

UniPoly poly_gcd(UniPoly a, UniPoly b, const Field& f) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    UniPoly r = poly_divmod(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(std::move(a));
}

/// base^e mod m.
UniPoly poly_powmod(UniPoly base, mpz_class e, const UniPoly& m, const Field& f) {
  UniPoly result{Scalar::one(f)};
  base = poly_divmod(std::move(base), m, f);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = poly_divmod(poly_mul(result, base, f), m, f);
    e >>= 1;
    if (e > 0) base = poly_divmod(poly_mul(base, base, f), m, f);
  }
  return result;
}

/// Splits a monic product of distinct linear factors over F_p.
void split_linear(const UniPoly& g, const Field& f, std::mt19937_64& rng, std::vector<Scalar>& roots) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    roots.push_back(-g[0] / g[1]);
    return;
  }
  const std::uint32_t p = f.characteristic;
  if (p == 2) {
    // Only 0 and 1 can be roots.
    for (int v = 0; v < 2; ++v)
      if (poly_eval(g, Scalar(f, v)).is_zero()) roots.push_back(Scalar(f, v));
    return;
  }
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  for (;;) {
    Scalar a(f, static_cast<long long>(dist(rng)));
    UniPoly lin{a, Scalar::one(f)};
    UniPoly h = poly_powmod(lin, mpz_class((p - 1) / 2), g, f);
    h = poly_sub(h, UniPoly{Scalar::one(f)}, f);
    UniPoly d = poly_gcd(g, h, f);
    if (d.size() > 1 && d.size() < g.size()) {
      UniPoly q;
      poly_divmod(g, d, f, &q);
      split_linear(d, f, rng, roots);
      split_linear(poly_monic(q), f, rng, roots);
      return;
    }
  }
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, int>> factors;
  for (mpz_class d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) factors.push_back({d, e});
  }
  if (n > 1) factors.push_back({n, 1});
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : factors) {
    std::size_t sz = out.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

}  // namespace

UniPoly characteristic_polynomial(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("characteristic polynomial of a non-square matrix");
  const Field f = m.field();
  const std::size_t n = m.rows();
  // Similarity reduction to upper Hessenberg form.
  DenseMatrix h = m;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && h(piv, k - 1).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(k, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, k));
    }
    Scalar inv = h(k, k - 1).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (h(i, k - 1).is_zero()) continue;
      Scalar u = h(i, k - 1) * inv;
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= u * h(k, j);
      for (std::size_t r = 0; r < n; ++r) h(r, k) += u * h(r, i);
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1}^{m} h_{j,j-1}) p_{i-1}
  std::vector<UniPoly> p(n + 1);
  p[0] = UniPoly{Scalar::one(f)};
  for (std::size_t mi = 1; mi <= n; ++mi) {
    UniPoly lin{-h(mi - 1, mi - 1), Scalar::one(f)};
    UniPoly acc = poly_mul(lin, p[mi - 1], f);
    Scalar prod = Scalar::one(f);
    for (std::size_t i = mi - 1; i-- > 0;) {
      prod *= h(i + 1, i);
      if (prod.is_zero()) break;
      Scalar c = h(i, mi - 1) * prod;
      if (c.is_zero()) continue;
      UniPoly term = p[i];
      for (auto& t : term) t *= c;
      acc = poly_sub(std::move(acc), term, f);
    }
    p[mi] = std::move(acc);
  }
  return p[n];
}

std::vector<Scalar> roots_in_field(const UniPoly& f_in, std::uint64_t seed) {
  UniPoly f = poly_trim(f_in);
  std::vector<Scalar> roots;
  if (f.size() <= 1) return roots;
  const Field field = f.front().field();
  // Zero root.
  std::size_t low = 0;
  while (f[low].is_zero()) ++low;
  if (low > 0) {
    roots.push_back(Scalar::zero(field));
    f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(low));
  }
  f = poly_monic(std::move(f));
  if (f.size() <= 1) return roots;
  if (field.is_prime()) {
    const std::uint32_t p = field.characteristic;
    UniPoly x{Scalar::zero(field), Scalar::one(field)};
    UniPoly xp = poly_powmod(x, mpz_class(p), f, field);
    UniPoly g = poly_gcd(f, poly_sub(xp, x, field), field);
    std::mt19937_64 rng(seed);
    split_linear(g, field, rng, roots);
  } else {
    // Clear denominators, then test +-d/e with d | a_0 and e | a_n.
    mpz_class lcm_den = 1;
    for (const auto& c : f) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.rational().get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : f) ints.push_back(mpz_class(c.rational() * lcm_den));
    const mpz_class bound("1000000000000000000");
    if (abs(ints.front()) > bound || abs(ints.back()) > bound) return roots;
    auto num = divisors(ints.front());
    auto den = divisors(ints.back());
    for (const auto& d : num)
      for (const auto& e : den)
        for (int sign : {1, -1}) {
          Scalar cand(field, mpq_class(sign * d, e));
          if (poly_eval(f, cand).is_zero() &&
              std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
        }
  }
  return roots;
}

}  // namespace syz
