#include "gorlab/algebra.hpp"

#include "gorlab/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gorlab {

FiniteAlgebra::FiniteAlgebra(BaseRing base, std::size_t rank, std::vector<Scalar> mult, std::vector<Scalar> unit,
                             std::string name)
    : base_(base), n_(rank), mult_(std::move(mult)), unit_(std::move(unit)), name_(std::move(name)) {
  if (mult_.size() != n_ * n_ * n_) throw std::invalid_argument("structure constants must have n^3 entries");
  if (unit_.size() != n_) throw std::invalid_argument("unit must have n entries");
  for (auto& x : mult_) x = base_.normalize(x);
  for (auto& x : unit_) x = base_.normalize(x);
  left_.reserve(n_);
  right_.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Matrix L(base_, n_, n_), R(base_, n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) {
        L(k, j) = c(i, j, k);
        R(k, j) = c(j, i, k);
      }
    left_.push_back(std::move(L));
    right_.push_back(std::move(R));
  }
  compute_generators();
}

Matrix FiniteAlgebra::left_mult_by(const Matrix& a) const {
  Matrix m(base_, n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    if (a(i, 0) != 0) m += left_[i].scaled(a(i, 0));
  return m;
}

Matrix FiniteAlgebra::right_mult_by(const Matrix& a) const {
  Matrix m(base_, n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    if (a(i, 0) != 0) m += right_[i].scaled(a(i, 0));
  return m;
}

Matrix FiniteAlgebra::multiply(const Matrix& a, const Matrix& b) const { return left_mult_by(a) * b; }

bool FiniteAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (c(i, j, k) != c(j, i, k)) return false;
  return true;
}

bool FiniteAlgebra::operator==(const FiniteAlgebra& o) const {
  return base_ == o.base_ && n_ == o.n_ && mult_ == o.mult_ && unit_ == o.unit_;
}

void FiniteAlgebra::compute_generators() {
  // Grow the R-span of words in chosen generators until it is all of A.
  std::vector<Matrix> span{unit_vector()};
  auto span_matrix = [&] { return hcat(span, base_, n_); };
  auto close = [&] {
    bool grew = true;
    while (grew) {
      grew = false;
      Matrix S = span_matrix();
      LinearSolver solver(S);
      std::vector<Matrix> fresh;
      for (std::size_t s = 0; s < S.cols(); ++s)
        for (std::size_t g : generators_) {
          Matrix v = left_[g] * S.col(s);
          if (!solver.contains(v)) fresh.push_back(v);
        }
      if (!fresh.empty()) {
        for (auto& v : fresh) span.push_back(v);
        Matrix B = image_basis(span_matrix());
        span.clear();
        for (std::size_t j = 0; j < B.cols(); ++j) span.push_back(B.col(j));
        grew = true;
      }
    }
  };
  for (std::size_t i = 0; i < n_; ++i) {
    if (LinearSolver(span_matrix()).contains(basis_vector(i))) continue;
    generators_.push_back(i);
    span.push_back(basis_vector(i));
    close();
  }
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) { return a == b || (a && b && *a == *b); }

std::string ValidationReport::summary() const {
  if (valid()) return "valid";
  std::ostringstream os;
  for (const auto& t : associativity_failures)
    os << "associativity fails at (" << t[0] << "," << t[1] << "," << t[2] << "); ";
  for (const auto& u : unit_failures) os << u << "; ";
  return os.str();
}

ValidationReport validate_algebra(const FiniteAlgebra& A) {
  ValidationReport rep;
  const std::size_t n = A.rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // (e_i e_j) e_k and e_i (e_j e_k) for all k at once via right multiplications.
      for (std::size_t k = 0; k < n; ++k) {
        bool ok = true;
        for (std::size_t m = 0; m < n && ok; ++m) {
          Scalar lhs = 0, rhs = 0;
          for (std::size_t t = 0; t < n; ++t) {
            lhs += A.c(i, j, t) * A.c(t, k, m);
            rhs += A.c(j, k, t) * A.c(i, t, m);
          }
          if (A.base().normalize(lhs) != A.base().normalize(rhs)) ok = false;
        }
        if (!ok) rep.associativity_failures.push_back({i, j, k});
      }
    }
  Matrix u = A.unit_vector();
  for (std::size_t i = 0; i < n; ++i) {
    Matrix e = A.basis_vector(i);
    if (A.multiply(u, e) != e) rep.unit_failures.push_back("unit fails on the left at coordinate " + std::to_string(i));
    if (A.multiply(e, u) != e) rep.unit_failures.push_back("unit fails on the right at coordinate " + std::to_string(i));
  }
  return rep;
}

AlgebraPtr make_algebra(FiniteAlgebra A) {
  ValidationReport rep = validate_algebra(A);
  if (!rep.valid()) throw std::invalid_argument("invalid algebra " + A.name() + ": " + rep.summary());
  return std::make_shared<const FiniteAlgebra>(std::move(A));
}

AlgebraPtr opposite(const AlgebraPtr& A) {
  const std::size_t n = A->rank();
  std::vector<Scalar> mult(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) mult[(i * n + j) * n + k] = A->c(j, i, k);
  std::string name = A->name();
  if (name.rfind("op(", 0) == 0 && name.back() == ')')
    name = name.substr(3, name.size() - 4);
  else
    name = "op(" + name + ")";
  FiniteAlgebra B(A->base(), n, std::move(mult), A->unit(), name);
  B.injdim_bound = A->injdim_bound;
  B.augmentation = A->augmentation;
  return std::make_shared<const FiniteAlgebra>(std::move(B));
}

AlgebraPtr tensor_product_algebra(const AlgebraPtr& A, const AlgebraPtr& B) {
  if (A->base() != B->base()) throw std::invalid_argument("tensor_product_algebra: base mismatch");
  const std::size_t n = A->rank(), m = B->rank(), N = n * m;
  std::vector<Scalar> mult(N * N * N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t s = 0; s < n; ++s) {
        const Scalar& a = A->c(i, k, s);
        if (a == 0) continue;
        for (std::size_t j = 0; j < m; ++j)
          for (std::size_t l = 0; l < m; ++l)
            for (std::size_t r = 0; r < m; ++r) {
              const Scalar& b = B->c(j, l, r);
              if (b == 0) continue;
              mult[((i * m + j) * N + (k * m + l)) * N + (s * m + r)] = a * b;
            }
      }
  std::vector<Scalar> unit(N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) unit[i * m + j] = A->unit()[i] * B->unit()[j];
  FiniteAlgebra E(A->base(), N, std::move(mult), std::move(unit), A->name() + "(x)" + B->name());
  return std::make_shared<const FiniteAlgebra>(std::move(E));
}

AlgebraPtr enveloping(const AlgebraPtr& A) {
  auto E = tensor_product_algebra(A, opposite(A));
  auto copy = std::make_shared<FiniteAlgebra>(*E);
  copy->set_name("env(" + A->name() + ")");
  return copy;
}

AlgebraPtr reduce_mod(const AlgebraPtr& A, long p) {
  if (!A->base().is_integers()) throw std::invalid_argument("reduce_mod expects an algebra over Z");
  BaseRing F = BaseRing::prime_field(p);
  FiniteAlgebra B(F, A->rank(), A->structure_constants(), A->unit(), A->name() + " mod " + std::to_string(p));
  if (A->augmentation) {
    B.augmentation = A->augmentation;
    for (auto& x : *B.augmentation) x = F.normalize(x);
  }
  return std::make_shared<const FiniteAlgebra>(std::move(B));
}

namespace {

std::vector<Scalar> unit_at(std::size_t n, std::size_t i) {
  std::vector<Scalar> u(n);
  u[i] = 1;
  return u;
}

std::string base_suffix(const BaseRing& base) { return base == BaseRing::rationals() ? "" : "," + base.name(); }

}  // namespace

AlgebraPtr truncated_poly(std::size_t n, const BaseRing& base) {
  if (n == 0) throw std::invalid_argument("truncated_poly needs n >= 1");
  std::vector<Scalar> mult(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) mult[(i * n + j) * n + i + j] = 1;
  FiniteAlgebra A(base, n, std::move(mult), unit_at(n, 0), "truncated_poly(" + std::to_string(n) + base_suffix(base) + ")");
  A.augmentation = unit_at(n, 0);
  return make_algebra(std::move(A));
}

AlgebraPtr cyclic_group_algebra(std::size_t n, const BaseRing& base) {
  if (n == 0) throw std::invalid_argument("cyclic group needs n >= 1");
  std::vector<Scalar> mult(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mult[(i * n + j) * n + (i + j) % n] = 1;
  FiniteAlgebra A(base, n, std::move(mult), unit_at(n, 0),
                  "group_algebra(cyclic," + std::to_string(n) + "," + base.name() + ")");
  if (base.is_integers()) A.injdim_bound = 1;
  A.augmentation = std::vector<Scalar>(n, Scalar(1));
  return make_algebra(std::move(A));
}

AlgebraPtr symmetric3_group_algebra(const BaseRing& base) {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  auto index = [&](const std::array<int, 3>& q) {
    return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<Scalar> mult(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::array<int, 3> comp;
      for (int t = 0; t < 3; ++t) comp[t] = perms[i][perms[j][t]];
      mult[(i * n + j) * n + index(comp)] = 1;
    }
  FiniteAlgebra A(base, n, std::move(mult), unit_at(n, 0), "group_algebra(symmetric,3," + base.name() + ")");
  if (base.is_integers()) A.injdim_bound = 1;
  A.augmentation = std::vector<Scalar>(n, Scalar(1));
  return make_algebra(std::move(A));
}

std::size_t upper_triangular_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j || j >= n) throw std::out_of_range("upper_triangular_index");
  // rows 0..i-1 contribute n + (n-1) + ... entries
  return i * n - i * (i - 1) / 2 + (j - i);
}

AlgebraPtr upper_triangular(std::size_t n, const BaseRing& base) {
  const std::size_t d = n * (n + 1) / 2;
  std::vector<Scalar> mult(d * d * d);
  std::vector<Scalar> unit(d);
  for (std::size_t i = 0; i < n; ++i) {
    unit[upper_triangular_index(n, i, i)] = 1;
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t l = j; l < n; ++l)
        mult[(upper_triangular_index(n, i, j) * d + upper_triangular_index(n, j, l)) * d + upper_triangular_index(n, i, l)] = 1;
  }
  return make_algebra(
      FiniteAlgebra(base, d, std::move(mult), std::move(unit), "upper_triangular(" + std::to_string(n) + base_suffix(base) + ")"));
}

AlgebraPtr quantum_exterior(const Scalar& q, const BaseRing& base) {
  Scalar qn = base.normalize(q);
  if (qn == 0) throw std::invalid_argument("quantum_exterior: q must be nonzero");
  if (!base.is_unit(qn)) throw std::invalid_argument("quantum_exterior: q must be invertible in the base ring");
  // basis 1, x, y, xy; x^2 = y^2 = 0, xy = -q yx so yx = -q^{-1} xy
  const std::size_t n = 4;
  std::vector<Scalar> mult(n * n * n);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) { mult[(i * n + j) * n + k] = v; };
  for (std::size_t i = 0; i < n; ++i) {
    set(0, i, i, 1);
    set(i, 0, i, 1);
  }
  set(1, 2, 3, 1);
  set(2, 1, 3, base.normalize(-base.inverse(qn)));
  FiniteAlgebra A(base, n, std::move(mult), unit_at(n, 0), "quantum_exterior(" + qn.get_str() + base_suffix(base) + ")");
  A.augmentation = unit_at(n, 0);
  return make_algebra(std::move(A));
}

AlgebraPtr commutative_fat_point(const BaseRing& base) {
  const std::size_t n = 3;
  std::vector<Scalar> mult(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    mult[(0 * n + i) * n + i] = 1;
    mult[(i * n + 0) * n + i] = 1;
  }
  FiniteAlgebra A(base, n, std::move(mult), unit_at(n, 0),
                  "commutative_fat_point" + (base == BaseRing::rationals() ? std::string() : "(" + base.name() + ")"));
  A.augmentation = unit_at(n, 0);
  return make_algebra(std::move(A));
}

namespace {

// Trace of M^e modulo `mod`, M an integer matrix given as mpz entries.
mpz_class trace_power_mod(std::vector<mpz_class> M, std::size_t n, const mpz_class& e, const mpz_class& mod) {
  auto mul = [&](const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> c(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (a[i * n + k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
      }
    for (auto& x : c) {
      x %= mod;
      if (x < 0) x += mod;
    }
    return c;
  };
  std::vector<mpz_class> R(n * n);
  for (std::size_t i = 0; i < n; ++i) R[i * n + i] = 1;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) R = mul(R, M);
    k /= 2;
    if (k > 0) M = mul(M, M);
  }
  mpz_class t = 0;
  for (std::size_t i = 0; i < n; ++i) t += R[i * n + i];
  t %= mod;
  if (t < 0) t += mod;
  return t;
}

void check_nilpotent_ideal(const FiniteAlgebra& A, const Matrix& J) {
  const std::size_t n = A.rank();
  if (J.cols() == 0) return;
  LinearSolver in_J(J);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < J.cols(); ++t) {
      if (!in_J.contains(A.left_mult(i) * J.col(t)) || !in_J.contains(A.right_mult(i) * J.col(t)))
        throw std::logic_error("radical computation produced a non-ideal");
    }
  Matrix P = J;
  for (std::size_t step = 0; step <= n; ++step) {
    std::vector<Matrix> prods;
    for (std::size_t a = 0; a < P.cols(); ++a)
      for (std::size_t b = 0; b < J.cols(); ++b) prods.push_back(A.multiply(P.col(a), J.col(b)));
    if (prods.empty()) return;
    P = image_basis(hcat(prods, A.base(), n));
    if (P.cols() == 0) return;
  }
  throw std::logic_error("radical computation produced a non-nilpotent ideal");
}

}  // namespace

Matrix radical_basis(const FiniteAlgebra& A) {
  const BaseRing& F = A.base();
  if (!F.is_field()) throw std::invalid_argument("radical_basis requires a field base");
  const std::size_t n = A.rank();
  Matrix J;
  if (F.kind() == RingKind::Rationals) {
    Matrix T(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Matrix L = A.left_mult(i) * A.left_mult(j);
        Scalar t = 0;
        for (std::size_t k = 0; k < n; ++k) t += L(k, k);
        T(i, j) = t;
      }
    J = kernel(T);
  } else {
    // Cohen-Ivanyos-Wales: I_i = { x in I_{i-1} : g_i(x b) = 0 for all b } with
    // g_i(a) = (Tr(lift(L_a)^{p^i}) mod p^{i+1}) / p^i.
    const long p = F.characteristic();
    std::size_t l = 0;
    for (std::size_t pw = p; pw <= n; pw *= p) ++l;
    Matrix I = Matrix::identity(F, n);
    mpz_class pi = 1;
    for (std::size_t i = 0; i <= l && I.cols() > 0; ++i) {
      mpz_class mod = pi * p;
      Matrix G(F, n, I.cols());
      for (std::size_t t = 0; t < I.cols(); ++t) {
        Matrix x = I.col(t);
        for (std::size_t s = 0; s < n; ++s) {
          Matrix z = A.multiply(x, A.basis_vector(s));
          Matrix Lz = A.left_mult_by(z);
          std::vector<mpz_class> M(n * n);
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) M[a * n + b] = Lz(a, b).get_num();
          mpz_class tr = trace_power_mod(M, n, pi, mod);
          if (tr % pi != 0) throw std::logic_error("radical: trace not divisible as expected");
          G.set(s, t, Scalar(mpz_class(tr / pi)));
        }
      }
      I = I * kernel(G);
      pi *= p;
    }
    J = I;
  }
  check_nilpotent_ideal(A, J);
  return J;
}

}  // namespace gorlab
