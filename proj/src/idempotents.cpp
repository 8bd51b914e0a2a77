#include "gorlab/algebra.hpp"
#include "gorlab/linalg.hpp"

#include <optional>
#include <random>
#include <stdexcept>

namespace gorlab {

namespace {

// Coefficients c0..cd (low to high) of a polynomial.
using Poly = std::vector<Scalar>;

Scalar eval(const Poly& m, const Scalar& x, const BaseRing& F) {
  Scalar v = 0;
  for (std::size_t i = m.size(); i-- > 0;) v = F.normalize(v * x + m[i]);
  return v;
}

Poly divide_linear(const Poly& m, const Scalar& c, const BaseRing& F) {
  // m = (x - c) q
  const std::size_t d = m.size() - 1;
  Poly q(d);
  q[d - 1] = m[d];
  for (std::size_t i = d - 1; i-- > 0;) q[i] = F.normalize(m[i + 1] + c * q[i + 1]);
  return q;
}

std::vector<mpz_class> divisors(mpz_class v) {
  if (v < 0) v = -v;
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  return out;
}

std::vector<Scalar> roots(const Poly& m, const BaseRing& F) {
  std::vector<Scalar> out;
  if (F.kind() == RingKind::PrimeField) {
    const long p = F.characteristic();
    if (p > 100000) return out;
    for (long c = 0; c < p; ++c)
      if (eval(m, Scalar(c), F) == 0) out.push_back(Scalar(c));
    return out;
  }
  // Rational roots of the integer polynomial obtained by clearing denominators.
  mpz_class den = 1;
  for (const auto& c : m) den = lcm(den, mpz_class(c.get_den()));
  std::vector<mpz_class> z;
  for (const auto& c : m) z.push_back(mpz_class(c * den));
  std::size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) out.push_back(Scalar(0));
  if (low + 1 >= z.size()) return out;
  auto lead = divisors(z.back()), trail = divisors(z[low]);
  if (abs(z[low]) > 1000000 || abs(z.back()) > 1000000) return out;
  for (const auto& a : trail)
    for (const auto& b : lead)
      for (int s : {1, -1}) {
        Scalar c(mpz_class(s * a), b);
        c.canonicalize();
        if (eval(m, c, F) == 0) {
          bool seen = false;
          for (const auto& r : out) seen |= (r == c);
          if (!seen) out.push_back(c);
        }
      }
  return out;
}

struct Quotient {
  const FiniteAlgebra& A;
  Matrix pi;  // A -> A/J
  Matrix mul(const Matrix& a, const Matrix& b) const { return A.multiply(a, b); }
  Matrix bar(const Matrix& a) const { return pi * a; }
  bool zero(const Matrix& a) const { return bar(a).is_zero(); }
};

// Minimal polynomial of b in the corner with identity e (modulo J).
Poly min_poly(const Quotient& Qt, const Matrix& e, const Matrix& b) {
  std::vector<Matrix> pw{e};
  std::vector<Matrix> bars{Qt.bar(e)};
  const BaseRing& F = e.base();
  while (true) {
    Matrix next = Qt.mul(pw.back(), b);
    Matrix nb = Qt.bar(next);
    Matrix S = hcat(bars, F, nb.rows());
    auto c = solve_linear(S, nb);
    if (c) {
      Poly m(pw.size() + 1);
      for (std::size_t i = 0; i < pw.size(); ++i) m[i] = F.normalize(-(*c)(i, 0));
      m.back() = 1;
      return m;
    }
    pw.push_back(next);
    bars.push_back(nb);
  }
}

Matrix poly_at(const Quotient& Qt, const Poly& q, const Matrix& e, const Matrix& b) {
  Matrix acc = e.scaled(q[0]);
  Matrix pw = e;
  for (std::size_t i = 1; i < q.size(); ++i) {
    pw = Qt.mul(pw, b);
    if (q[i] != 0) acc += pw.scaled(q[i]);
  }
  return acc;
}

// A nontrivial idempotent of the corner (mod J) split off by the element b, if any.
std::optional<Matrix> split_by(const Quotient& Qt, const Matrix& e, const Matrix& b) {
  const BaseRing& F = e.base();
  Poly m = min_poly(Qt, e, b);
  if (m.size() < 3) return std::nullopt;
  for (const auto& c : roots(m, F)) {
    Poly q = divide_linear(m, c, F);
    Scalar qc = eval(q, c, F);
    if (qc == 0) continue;
    Matrix f = poly_at(Qt, q, e, b).scaled(F.inverse(qc));
    return f;
  }
  return std::nullopt;
}

}  // namespace

IdempotentDecomposition primitive_idempotents(const FiniteAlgebra& A, std::uint64_t seed) {
  const BaseRing& F = A.base();
  if (!F.is_field()) throw std::invalid_argument("primitive_idempotents requires a field base");
  const std::size_t n = A.rank();
  IdempotentDecomposition out;
  out.radical = radical_basis(A);
  Matrix pi;
  if (out.radical.cols() == 0) {
    pi = Matrix::identity(F, n);
  } else {
    // Rows of pi: a complement of J's column span, as coordinates modulo J.
    ColumnEchelon e = column_echelon(out.radical);
    std::vector<bool> pivot(n, false);
    for (auto r : e.pivot_rows) pivot[r] = true;
    std::vector<std::size_t> free_rows;
    for (std::size_t r = 0; r < n; ++r)
      if (!pivot[r]) free_rows.push_back(r);
    Matrix comp(F, n, free_rows.size());
    for (std::size_t j = 0; j < free_rows.size(); ++j) comp(free_rows[j], j) = 1;
    Matrix T = hcat(e.echelon.cols_range(0, e.rank), comp);
    pi = inverse(T)->rows_range(e.rank, n);
  }
  Quotient Qt{A, pi};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-2, 2);

  std::vector<Matrix> stack{A.unit_vector()}, done;
  bool certified = true;
  while (!stack.empty()) {
    Matrix e = stack.back();
    stack.pop_back();
    std::vector<Matrix> corner;
    for (std::size_t i = 0; i < n; ++i) corner.push_back(Qt.mul(Qt.mul(e, A.basis_vector(i)), e));
    Matrix cb = Qt.bar(hcat(corner, F, n));
    const std::size_t dim = rank(cb);
    if (dim <= 1) {
      done.push_back(e);
      continue;
    }
    std::optional<Matrix> f;
    for (std::size_t i = 0; i < n && !f; ++i) f = split_by(Qt, e, corner[i]);
    for (int t = 0; t < 24 && !f; ++t) {
      Matrix b(F, n, 1);
      for (std::size_t i = 0; i < n; ++i) b += corner[i].scaled(Scalar(coef(rng)));
      f = split_by(Qt, e, b);
    }
    if (!f && F.kind() == RingKind::PrimeField) {
      // Exhaustive search over the corner modulo J when it is small.
      const long p = F.characteristic();
      double total = 1;
      for (std::size_t i = 0; i < dim; ++i) total *= static_cast<double>(p);
      // Corner elements whose images modulo J form a basis.
      std::vector<Matrix> basis;
      Matrix acc(F, cb.rows(), 0);
      for (std::size_t i = 0; i < n && basis.size() < dim; ++i) {
        Matrix cand = hcat(acc, cb.col(i));
        if (rank(cand) > acc.cols()) {
          acc = cand;
          basis.push_back(corner[i]);
        }
      }
      if (total <= 65536.0) {
        std::vector<long> digits(dim, 0);
        while (!f) {
          std::size_t pos = 0;
          while (pos < dim && ++digits[pos] == p) digits[pos++] = 0;
          if (pos == dim) break;
          Matrix x(F, n, 1);
          for (std::size_t i = 0; i < dim; ++i)
            if (digits[i]) x += basis[i].scaled(Scalar(digits[i]));
          if (Qt.zero(Qt.mul(x, x) - x) && !Qt.zero(x) && !Qt.zero(e - x)) f = x;
        }
        if (!f) {
          done.push_back(e);
          continue;
        }
      } else {
        certified = false;
      }
    } else if (!f) {
      certified = false;
    }
    if (!f) {
      done.push_back(e);
      continue;
    }
    stack.push_back(*f);
    stack.push_back(e - *f);
  }
  out.certified = certified;

  // Lift to orthogonal idempotents of A.
  Matrix one = A.unit_vector();
  Matrix E(F, n, 1);
  for (std::size_t t = 0; t + 1 < done.size(); ++t) {
    Matrix c = one - E;
    Matrix a = A.multiply(A.multiply(c, done[t]), c);
    for (int it = 0; it < 128; ++it) {
      Matrix a2 = A.multiply(a, a);
      if (a2 == a) break;
      Matrix a3 = A.multiply(a2, a);
      a = a2.scaled(3) - a3.scaled(2);
    }
    if (A.multiply(a, a) != a) throw std::logic_error("primitive_idempotents: lifting did not converge");
    out.idempotents.push_back(a);
    E += a;
  }
  out.idempotents.push_back(one - E);
  return out;
}

}  // namespace gorlab
