#pragma once

#include "syzygy/scalar.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace syz {

/// Dense matrix over the coefficient field, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(const Field& field, std::size_t rows, std::size_t cols);

  static DenseMatrix identity(const Field& field, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  DenseMatrix operator*(const DenseMatrix& o) const;
  DenseMatrix operator+(const DenseMatrix& o) const;
  DenseMatrix operator-(const DenseMatrix& o) const;
  DenseMatrix scaled(const Scalar& c) const;
  DenseMatrix transpose() const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
  bool is_zero() const;

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);

 private:
  Field field_{};
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  DenseMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form.
RowEchelon row_reduce(DenseMatrix m);
std::size_t rank(const DenseMatrix& m);
/// Basis of {v : m v = 0}.
std::vector<std::vector<Scalar>> kernel(const DenseMatrix& m);
/// Some solution of m v = b, if one exists.
std::optional<std::vector<Scalar>> solve(const DenseMatrix& m, const std::vector<Scalar>& b);
std::optional<DenseMatrix> inverse(const DenseMatrix& m);
Scalar determinant(DenseMatrix m);

/// Univariate polynomials over k as coefficient vectors, lowest degree first,
/// trailing zeros trimmed.
using UniPoly = std::vector<Scalar>;

UniPoly characteristic_polynomial(const DenseMatrix& m);
/// Distinct roots lying in k. Over F_p this is complete; over QQ it uses the
/// rational root test and gives up on constant terms too large to factor.
std::vector<Scalar> roots_in_field(const UniPoly& f, std::uint64_t seed);
UniPoly poly_trim(UniPoly f);
Scalar poly_eval(const UniPoly& f, const Scalar& x);

}  // namespace syz
