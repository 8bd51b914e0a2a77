#pragma once

#include "gorlab/matrix.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gorlab {

// A free R-algebra of finite rank n given by structure constants
// e_i * e_j = sum_k c[i][j][k] e_k and the coordinates of its unit.
class FiniteAlgebra {
public:
  FiniteAlgebra(BaseRing base, std::size_t rank, std::vector<Scalar> mult, std::vector<Scalar> unit,
                std::string name = "algebra");

  const BaseRing& base() const { return base_; }
  std::size_t rank() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return mult_[(i * n_ + j) * n_ + k]; }
  const std::vector<Scalar>& structure_constants() const { return mult_; }
  const std::vector<Scalar>& unit() const { return unit_; }
  Matrix unit_vector() const { return Matrix::column(base_, unit_); }
  Matrix basis_vector(std::size_t i) const { return Matrix::unit_column(base_, n_, i); }

  // Left multiplication by e_i (column j holds e_i e_j) and right multiplication by e_j.
  const Matrix& left_mult(std::size_t i) const { return left_[i]; }
  const Matrix& right_mult(std::size_t j) const { return right_[j]; }
  Matrix left_mult_by(const Matrix& a) const;
  Matrix right_mult_by(const Matrix& a) const;
  Matrix multiply(const Matrix& a, const Matrix& b) const;

  // Basis indices generating A as an R-algebra; A-linearity only needs checking on these.
  const std::vector<std::size_t>& generators() const { return generators_; }

  bool is_commutative() const;

  // Declared bound on the local injective dimension (ZG orders carry 1).
  std::optional<int> injdim_bound;
  // Images of basis elements under a distinguished algebra map A -> R, when the preset has one.
  std::optional<std::vector<Scalar>> augmentation;

  bool operator==(const FiniteAlgebra& o) const;
  bool operator!=(const FiniteAlgebra& o) const { return !(*this == o); }

private:
  void compute_generators();

  BaseRing base_;
  std::size_t n_;
  std::vector<Scalar> mult_, unit_;
  std::string name_;
  std::vector<Matrix> left_, right_;
  std::vector<std::size_t> generators_;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

struct ValidationReport {
  std::vector<std::array<std::size_t, 3>> associativity_failures;
  std::vector<std::string> unit_failures;
  bool valid() const { return associativity_failures.empty() && unit_failures.empty(); }
  std::string summary() const;
};

ValidationReport validate_algebra(const FiniteAlgebra& A);

AlgebraPtr make_algebra(FiniteAlgebra A);  // validates, throws std::invalid_argument on failure
AlgebraPtr opposite(const AlgebraPtr& A);
// Basis index i*nB+j is e_i (x) f_j with componentwise product.
AlgebraPtr tensor_product_algebra(const AlgebraPtr& A, const AlgebraPtr& B);
AlgebraPtr enveloping(const AlgebraPtr& A);  // A (x) op(A); basis index i*n+j is e_i (x) e_j^op
AlgebraPtr reduce_mod(const AlgebraPtr& A, long p);

// Presets.
AlgebraPtr truncated_poly(std::size_t n, const BaseRing& base = BaseRing::rationals());
AlgebraPtr cyclic_group_algebra(std::size_t n, const BaseRing& base = BaseRing::rationals());
AlgebraPtr symmetric3_group_algebra(const BaseRing& base = BaseRing::rationals());
AlgebraPtr upper_triangular(std::size_t n, const BaseRing& base = BaseRing::rationals());
AlgebraPtr quantum_exterior(const Scalar& q, const BaseRing& base = BaseRing::rationals());
AlgebraPtr commutative_fat_point(const BaseRing& base = BaseRing::rationals());

// Index of E_ij (i <= j, zero based) in upper_triangular(n).
std::size_t upper_triangular_index(std::size_t n, std::size_t i, std::size_t j);

// Jacobson radical of an algebra over a field, as a column basis in A-coordinates.
Matrix radical_basis(const FiniteAlgebra& A);

}  // namespace gorlab

namespace gorlab {

// Orthogonal idempotents summing to 1, lifted from A/J. `certified` is set when
// every corner e(A/J)e was proven to contain no further idempotents.
struct IdempotentDecomposition {
  std::vector<Matrix> idempotents;  // A-coordinates
  Matrix radical;
  bool certified = false;
};
IdempotentDecomposition primitive_idempotents(const FiniteAlgebra& A, std::uint64_t seed = 0x1d3);

}  // namespace gorlab
