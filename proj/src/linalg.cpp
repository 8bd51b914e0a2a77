#include "gorlab/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace gorlab {

namespace {

mpz_class as_int(const Scalar& s) { return s.get_num(); }

Scalar floor_div(const Scalar& a, const Scalar& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  return Scalar(q);
}

// col_j -= q * col_k
void col_axpy(Matrix& m, std::size_t j, std::size_t k, const Scalar& q, bool modp) {
  if (q == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Scalar& v = m(r, k);
    if (v == 0) continue;
    Scalar& t = m(r, j);
    t -= q * v;
    if (modp) t = m.base().normalize(t);
  }
}

void col_swap(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

void col_scale(Matrix& m, std::size_t j, const Scalar& s) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m(r, j) != 0) m(r, j) = m.base().normalize(m(r, j) * s);
}

void row_axpy(Matrix& m, std::size_t i, std::size_t k, const Scalar& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m(k, c) != 0) m(i, c) -= q * m(k, c);
}

void row_swap(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void row_negate(Matrix& m, std::size_t i) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = -m(i, c);
}

}  // namespace

std::string RInvariants::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  if (base.is_integers()) {
    for (const auto& d : torsion) {
      sep();
      os << "Z/" << d.get_str();
    }
    if (free_rank) {
      sep();
      os << "Z^" << free_rank;
    }
  } else {
    sep();
    os << base.name() << "^" << free_rank;
  }
  return os.str();
}

ColumnEchelon column_echelon(const Matrix& m) {
  const BaseRing& R = m.base();
  const bool field = R.is_field();
  const bool modp = R.kind() == RingKind::PrimeField;
  ColumnEchelon out;
  out.echelon = m;
  out.transform = Matrix::identity(R, m.cols());
  Matrix& E = out.echelon;
  Matrix& V = out.transform;
  const std::size_t n = m.cols();
  std::size_t k = 0;
  for (std::size_t r = 0; r < m.rows() && k < n; ++r) {
    bool have_pivot = false;
    if (field) {
      std::size_t c = n;
      for (std::size_t j = k; j < n; ++j)
        if (E(r, j) != 0) {
          c = j;
          break;
        }
      if (c == n) continue;
      col_swap(E, c, k);
      col_swap(V, c, k);
      Scalar inv = R.inverse(E(r, k));
      col_scale(E, k, inv);
      col_scale(V, k, inv);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k || E(r, j) == 0) continue;
        Scalar q = E(r, j);
        col_axpy(E, j, k, q, modp);
        col_axpy(V, j, k, q, modp);
      }
      have_pivot = true;
    } else {
      while (true) {
        std::size_t c = n;
        for (std::size_t j = k; j < n; ++j) {
          if (E(r, j) == 0) continue;
          if (c == n || abs(E(r, j)) < abs(E(r, c))) c = j;
        }
        if (c == n) break;
        have_pivot = true;
        col_swap(E, c, k);
        col_swap(V, c, k);
        bool clean = true;
        for (std::size_t j = k + 1; j < n; ++j) {
          if (E(r, j) == 0) continue;
          Scalar q = floor_div(E(r, j), E(r, k));
          col_axpy(E, j, k, q, false);
          col_axpy(V, j, k, q, false);
          if (E(r, j) != 0) clean = false;
        }
        if (clean) break;
      }
      if (!have_pivot) continue;
      if (E(r, k) < 0) {
        col_scale(E, k, Scalar(-1));
        col_scale(V, k, Scalar(-1));
      }
      for (std::size_t j = 0; j < k; ++j) {
        if (E(r, j) == 0) continue;
        Scalar q = floor_div(E(r, j), E(r, k));
        col_axpy(E, j, k, q, false);
        col_axpy(V, j, k, q, false);
      }
    }
    out.pivot_rows.push_back(r);
    ++k;
  }
  out.rank = k;
  return out;
}

std::size_t rank(const Matrix& m) { return column_echelon(m).rank; }

Matrix kernel(const Matrix& m) {
  ColumnEchelon e = column_echelon(m);
  return e.transform.cols_range(e.rank, m.cols());
}

Matrix field_kernel(const Matrix& m) {
  if (!m.base().is_field()) throw ShapeError("field_kernel requires a field base");
  return kernel(m);
}

Matrix image_basis(const Matrix& m) {
  ColumnEchelon e = column_echelon(m);
  return e.echelon.cols_range(0, e.rank);
}

LinearSolver::LinearSolver(const Matrix& m) : rows_(m.rows()), cols_(m.cols()), ech_(column_echelon(m)) {}

std::optional<Matrix> LinearSolver::solve(const Matrix& b) const {
  if (b.rows() != rows_) throw ShapeError("solve: right-hand side has wrong number of rows");
  if (b.base() != ech_.echelon.base()) throw ShapeError("solve: base ring mismatch");
  const BaseRing& R = b.base();
  const Matrix& E = ech_.echelon;
  const std::size_t k = ech_.rank;
  Matrix x(R, cols_, b.cols());
  Matrix y(R, k, 1);
  for (std::size_t c = 0; c < b.cols(); ++c) {
    Matrix res = b.col(c);
    for (std::size_t t = 0; t < k; ++t) {
      std::size_t r = ech_.pivot_rows[t];
      const Scalar& piv = E(r, t);
      Scalar v = res(r, 0);
      Scalar yt;
      if (R.is_field()) {
        yt = R.normalize(v * R.inverse(piv));
      } else {
        if (v.get_num() % piv.get_num() != 0) return std::nullopt;
        yt = v / piv;
      }
      y(t, 0) = yt;
      if (yt != 0)
        for (std::size_t i = 0; i < rows_; ++i)
          if (E(i, t) != 0) res(i, 0) = R.normalize(res(i, 0) - yt * E(i, t));
    }
    if (!res.is_zero()) return std::nullopt;
    for (std::size_t i = 0; i < cols_; ++i) {
      Scalar acc = 0;
      for (std::size_t t = 0; t < k; ++t)
        if (y(t, 0) != 0) acc += ech_.transform(i, t) * y(t, 0);
      x(i, c) = R.normalize(acc);
    }
  }
  return x;
}

std::optional<Matrix> solve_linear(const Matrix& m, const Matrix& b) {
  if (m.base() != b.base()) throw ShapeError("solve_linear: base ring mismatch");
  if (m.rows() != b.rows()) throw ShapeError("solve_linear: shape mismatch");
  return LinearSolver(m).solve(b);
}

SmithForm smith_normal_form(const Matrix& m) {
  if (!m.base().is_integers()) throw ShapeError("smith_normal_form requires the integers");
  const BaseRing& R = m.base();
  const std::size_t r = m.rows(), c = m.cols();
  SmithForm s;
  s.D = m;
  s.U = Matrix::identity(R, r);
  s.U_inverse = Matrix::identity(R, r);
  s.V = Matrix::identity(R, c);
  Matrix& D = s.D;
  Matrix& U = s.U;
  Matrix& Ui = s.U_inverse;
  Matrix& V = s.V;

  auto rswap = [&](std::size_t a, std::size_t b) {
    row_swap(D, a, b);
    row_swap(U, a, b);
    col_swap(Ui, a, b);
  };
  auto cswap = [&](std::size_t a, std::size_t b) {
    col_swap(D, a, b);
    col_swap(V, a, b);
  };
  // row_i -= q row_k
  auto raxpy = [&](std::size_t i, std::size_t k, const Scalar& q) {
    row_axpy(D, i, k, q);
    row_axpy(U, i, k, q);
    col_axpy(Ui, k, i, -q, false);
  };
  auto caxpy = [&](std::size_t j, std::size_t k, const Scalar& q) {
    col_axpy(D, j, k, q, false);
    col_axpy(V, j, k, q, false);
  };

  std::size_t t = 0;
  for (; t < std::min(r, c); ++t) {
    std::size_t bi = r, bj = c;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        if (D(i, j) == 0) continue;
        if (bi == r || abs(D(i, j)) < abs(D(bi, bj))) {
          bi = i;
          bj = j;
        }
      }
    if (bi == r) break;
    rswap(t, bi);
    cswap(t, bj);
    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < r; ++i)
        if (D(i, t) != 0) {
          raxpy(i, t, floor_div(D(i, t), D(t, t)));
          if (D(i, t) != 0) dirty = true;
        }
      for (std::size_t j = t + 1; j < c; ++j)
        if (D(t, j) != 0) {
          caxpy(j, t, floor_div(D(t, j), D(t, t)));
          if (D(t, j) != 0) dirty = true;
        }
      if (dirty) {
        std::size_t bi2 = t, bj2 = t;
        for (std::size_t i = t + 1; i < r; ++i)
          if (D(i, t) != 0 && abs(D(i, t)) < abs(D(bi2, bj2))) {
            bi2 = i;
            bj2 = t;
          }
        for (std::size_t j = t + 1; j < c; ++j)
          if (D(t, j) != 0 && abs(D(t, j)) < abs(D(bi2, bj2))) {
            bi2 = t;
            bj2 = j;
          }
        rswap(t, bi2);
        cswap(t, bj2);
        continue;
      }
      bool fixed = false;
      for (std::size_t i = t + 1; i < r && !fixed; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (D(i, j).get_num() % D(t, t).get_num() != 0) {
            raxpy(t, i, Scalar(-1));
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (D(t, t) < 0) {
      row_negate(D, t);
      row_negate(U, t);
      for (std::size_t i = 0; i < r; ++i) Ui(i, t) = -Ui(i, t);
    }
  }
  s.rank = t;
  for (std::size_t i = 0; i < t; ++i)
    if (D(i, i) != 1) s.invariant_factors.push_back(as_int(D(i, i)));
  return s;
}

RInvariants zero_invariants(const BaseRing& base) {
  RInvariants inv;
  inv.base = base;
  return inv;
}

RInvariants cokernel_invariants(const Matrix& m) {
  RInvariants inv;
  inv.base = m.base();
  if (m.base().is_field()) {
    inv.free_rank = m.rows() - rank(m);
    return inv;
  }
  SmithForm s = smith_normal_form(m);
  inv.free_rank = m.rows() - s.rank;
  inv.torsion = s.invariant_factors;
  return inv;
}

RInvariants subquotient_invariants(const Matrix& L, const Matrix& S) {
  Matrix B = image_basis(L);
  if (B.cols() == 0) return zero_invariants(L.base());
  auto coords = LinearSolver(B).solve(S);
  if (!coords) throw std::logic_error("subquotient: S is not contained in L");
  return cokernel_invariants(*coords);
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of non-square matrix");
  const BaseRing& R = m.base();
  const bool modp = R.kind() == RingKind::PrimeField;
  Matrix a = m;
  Scalar det = 1;
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = n;
    for (std::size_t i = k; i < n; ++i)
      if (a(i, k) != 0) {
        p = i;
        break;
      }
    if (p == n) return 0;
    if (p != k) {
      row_swap(a, p, k);
      det = -det;
    }
    det *= a(k, k);
    if (modp) det = R.normalize(det);
    Scalar inv = modp ? R.inverse(a(k, k)) : Scalar(1 / a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Scalar f = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        if (modp) a(i, j) = R.normalize(a(i, j));
      }
    }
  }
  return R.normalize(det);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of non-square matrix");
  return LinearSolver(m).solve(Matrix::identity(m.base(), m.rows()));
}

}  // namespace gorlab
