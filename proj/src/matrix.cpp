#include "gorlab/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace gorlab {

namespace {
void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}
}  // namespace

Matrix Matrix::identity(const BaseRing& base, std::size_t n) {
  Matrix m(base, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const BaseRing& base, const std::vector<std::vector<long>>& rows) {
  std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  Matrix m(base, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    require(rows[i].size() == c, "ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar(rows[i][j]));
  }
  return m;
}

Matrix Matrix::from_scalars(const BaseRing& base, std::size_t r, std::size_t c, std::vector<Scalar> v) {
  require(v.size() == r * c, "scalar count mismatch");
  Matrix m(base, r, c);
  for (std::size_t i = 0; i < v.size(); ++i) m.data_[i] = base.normalize(v[i]);
  return m;
}

Matrix Matrix::column(const BaseRing& base, const std::vector<Scalar>& v) {
  return from_scalars(base, v.size(), 1, v);
}

Matrix Matrix::unit_column(const BaseRing& base, std::size_t n, std::size_t i) {
  Matrix m(base, n, 1);
  m(i, 0) = 1;
  return m;
}

Matrix Matrix::col(std::size_t j) const { return cols_range(j, j + 1); }

Matrix Matrix::cols_range(std::size_t from, std::size_t to) const {
  require(from <= to && to <= cols_, "column range");
  return block(0, from, rows_, to - from);
}

Matrix Matrix::rows_range(std::size_t from, std::size_t to) const {
  require(from <= to && to <= rows_, "row range");
  return block(from, 0, to - from, cols_);
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix m(base_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
  return m;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix m(base_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  Matrix m(base_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  require(r0 + m.rows_ <= rows_ && c0 + m.cols_ <= cols_, "set_block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

std::vector<Scalar> Matrix::col_vector(std::size_t j) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix m(base_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Matrix Matrix::normalized() const {
  Matrix m(*this);
  for (auto& x : m.data_) x = base_.normalize(x);
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix m(*this);
  m += o;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "shape mismatch in +");
  bool modp = base_.kind() == RingKind::PrimeField;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    data_[i] += o.data_[i];
    if (modp) data_[i] = base_.normalize(data_[i]);
  }
  return *this;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
  Matrix m(*this);
  for (auto& x : m.data_) x = base_.normalize(-x);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require(cols_ == o.rows_, "shape mismatch in *");
  Matrix m(base_, rows_, o.cols_);
  Scalar t;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (b == 0) continue;
        t = a * b;
        m(i, j) += t;
      }
    }
  if (base_.kind() == RingKind::PrimeField)
    for (auto& x : m.data_) x = base_.normalize(x);
  return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m(*this);
  for (auto& x : m.data_) x = base_.normalize(x * s);
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::vec() const {
  Matrix v(base_, rows_ * cols_, 1);
  for (std::size_t b = 0; b < cols_; ++b)
    for (std::size_t a = 0; a < rows_; ++a) v(b * rows_ + a, 0) = (*this)(a, b);
  return v;
}

Matrix Matrix::unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
  require(v.rows() == rows * cols && v.cols() == 1, "unvec shape");
  Matrix m(v.base(), rows, cols);
  for (std::size_t b = 0; b < cols; ++b)
    for (std::size_t a = 0; a < rows; ++a) m(a, b) = v(b * rows + a, 0);
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix hcat(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), "hcat rows");
  Matrix m(a.base(), a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix vcat(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols(), "vcat cols");
  Matrix m(a.base(), a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Matrix hcat(const std::vector<Matrix>& parts, const BaseRing& base, std::size_t rows) {
  std::size_t c = 0;
  for (const auto& p : parts) {
    require(p.rows() == rows, "hcat rows");
    c += p.cols();
  }
  Matrix m(base, rows, c);
  c = 0;
  for (const auto& p : parts) {
    m.set_block(0, c, p);
    c += p.cols();
  }
  return m;
}

Matrix vcat(const std::vector<Matrix>& parts, const BaseRing& base, std::size_t cols) {
  std::size_t r = 0;
  for (const auto& p : parts) {
    require(p.cols() == cols, "vcat cols");
    r += p.rows();
  }
  Matrix m(base, r, cols);
  r = 0;
  for (const auto& p : parts) {
    m.set_block(r, 0, p);
    r += p.rows();
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.base(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (b(k, l) != 0) m.set(i * b.rows() + k, j * b.cols() + l, a(i, j) * b(k, l));
    }
  return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.base(), a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

}  // namespace gorlab
