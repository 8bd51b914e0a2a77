#pragma once

#include "gorlab/base_ring.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace gorlab {

// Dense row-major matrix of exact scalars over a BaseRing.
class Matrix {
public:
  Matrix() = default;
  Matrix(const BaseRing& base, std::size_t rows, std::size_t cols)
      : base_(base), rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix zero(const BaseRing& base, std::size_t r, std::size_t c) { return Matrix(base, r, c); }
  static Matrix identity(const BaseRing& base, std::size_t n);
  // Rows given as integers; convenient for fixtures and tests.
  static Matrix from_rows(const BaseRing& base, const std::vector<std::vector<long>>& rows);
  static Matrix from_scalars(const BaseRing& base, std::size_t r, std::size_t c, std::vector<Scalar> v);
  static Matrix column(const BaseRing& base, const std::vector<Scalar>& v);
  static Matrix unit_column(const BaseRing& base, std::size_t n, std::size_t i);

  const BaseRing& base() const { return base_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const Scalar& v) { data_[r * cols_ + c] = base_.normalize(v); }

  Matrix col(std::size_t j) const;
  Matrix cols_range(std::size_t from, std::size_t to) const;
  Matrix rows_range(std::size_t from, std::size_t to) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  std::vector<Scalar> col_vector(std::size_t j) const;

  Matrix transpose() const;
  bool is_zero() const;
  Matrix normalized() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix& operator+=(const Matrix& o);
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  // Column-major vectorization, entry (a, b) at index b * rows + a.
  Matrix vec() const;
  static Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols);

  std::string to_string() const;

private:
  BaseRing base_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix hcat(const Matrix& a, const Matrix& b);
Matrix vcat(const Matrix& a, const Matrix& b);
Matrix hcat(const std::vector<Matrix>& parts, const BaseRing& base, std::size_t rows);
Matrix vcat(const std::vector<Matrix>& parts, const BaseRing& base, std::size_t cols);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);

}  // namespace gorlab
