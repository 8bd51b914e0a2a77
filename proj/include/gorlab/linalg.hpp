#pragma once

#include "gorlab/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gorlab {

// Shape or ring mismatch in a linear-algebra call; distinct from "no solution".
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Normal form of a finitely generated R-module: over a field only free_rank
// (the dimension) is used; over Z the torsion list is d1 | d2 | ... with di >= 2.
struct RInvariants {
  BaseRing base;
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool is_finite() const { return free_rank == 0 || base.kind() == RingKind::PrimeField; }
  std::string to_string() const;
  bool operator==(const RInvariants& o) const {
    return base == o.base && free_rank == o.free_rank && torsion == o.torsion;
  }
  bool operator!=(const RInvariants& o) const { return !(*this == o); }
};

// Column echelon form m * transform = echelon. The first `rank` columns of
// `echelon` are a basis of the column span (Hermite-reduced over Z, reduced
// over a field); the remaining columns of `transform` span the kernel.
struct ColumnEchelon {
  Matrix echelon;
  Matrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

ColumnEchelon column_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);
Matrix kernel(const Matrix& m);       // saturated kernel lattice over Z
Matrix image_basis(const Matrix& m);  // basis of the column span
Matrix field_kernel(const Matrix& m);

// Reusable solver for m * x = b against a fixed m.
class LinearSolver {
public:
  explicit LinearSolver(const Matrix& m);
  std::optional<Matrix> solve(const Matrix& b) const;  // b may have several columns
  bool contains(const Matrix& b) const { return solve(b).has_value(); }
  std::size_t rank() const { return ech_.rank; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

private:
  std::size_t rows_, cols_;
  ColumnEchelon ech_;
};

std::optional<Matrix> solve_linear(const Matrix& m, const Matrix& b);

struct SmithForm {
  Matrix U, D, V, U_inverse;
  std::size_t rank = 0;
  std::vector<mpz_class> invariant_factors;  // nonzero non-unit diagonal entries
};

SmithForm smith_normal_form(const Matrix& m);

RInvariants cokernel_invariants(const Matrix& m);
// Invariants of span(L) / span(S) where span(S) must lie in span(L).
RInvariants subquotient_invariants(const Matrix& L, const Matrix& S);
RInvariants zero_invariants(const BaseRing& base);

Scalar determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);  // inverse over the base ring (unimodular over Z)

}  // namespace gorlab
