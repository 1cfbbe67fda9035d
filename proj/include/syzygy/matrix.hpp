#pragma once

#include "syzygy/polynomial.hpp"

#include <string>
#include <vector>

namespace syz {

/// Dense matrix of polynomials over one ambient ring.
class Matrix {
 public:
  Matrix() = default;
  Matrix(PolyRingPtr ring, std::size_t rows, std::size_t cols);

  static Matrix identity(PolyRingPtr ring, std::size_t n);
  static Matrix from_rows(PolyRingPtr ring, const std::vector<std::vector<Polynomial>>& rows);
  static Matrix from_columns(PolyRingPtr ring, std::size_t rows,
                             const std::vector<std::vector<Polynomial>>& columns);

  const PolyRingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Polynomial> column(std::size_t c) const;
  std::vector<Polynomial> row(std::size_t r) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Polynomial& p) const;
  Matrix transpose() const;
  std::vector<Polynomial> apply(const std::vector<Polynomial>& v) const;

  /// [this | o]
  Matrix hconcat(const Matrix& o) const;
  /// [this ; o]
  Matrix vconcat(const Matrix& o) const;
  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  Matrix select_rows(const std::vector<std::size_t>& rows) const;
  /// Kronecker product with the n x n identity: each entry a becomes a * I_n.
  Matrix kronecker_identity(std::size_t n) const;

  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  PolyRingPtr ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> data_;
};

Matrix block_diagonal(const Matrix& a, const Matrix& b);

}  // namespace syz
