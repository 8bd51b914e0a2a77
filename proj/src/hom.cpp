#include "gorlab/hom.hpp"

#include <random>
#include <stdexcept>

namespace gorlab {

HomSpace::HomSpace(const Module& M, const Module& N) : M_(M), N_(N) {
  if (!same_algebra(M.algebra, N.algebra)) throw std::invalid_argument("hom_module: algebra mismatch");
  const BaseRing& R = M.base;
  tM_ = tidy(M);
  tN_ = tidy(N);
  const Module& Mt = tM_.module;
  const Module& Nt = tN_.module;
  const std::size_t gM = Mt.gens, gN = Nt.gens, rN = Nt.relations.cols(), rM = Mt.relations.cols();
  const FiniteAlgebra& A = *M.algebra;
  std::vector<Matrix> tidy_basis;

  if (M.free_rank && !M.has_relations()) {
    // Hom_A(A^r, N) = N^r by evaluation at the free generators.
    fast_free_ = true;
    const std::size_t r = *M.free_rank, n = A.rank();
    for (std::size_t l = 0; l < r; ++l)
      for (std::size_t t = 0; t < gN; ++t) {
        Matrix X(R, gN, gM);
        for (std::size_t k = 0; k < n; ++k) X.set_block(0, l * n + k, Nt.action[k].col(t));
        tidy_basis.push_back(X);
      }
    rel_ = kron(Matrix::identity(R, r), Nt.relations);
    if (rel_.rows() != r * gN) rel_ = Matrix(R, r * gN, 0);
    to_new_ = Matrix::identity(R, r * gN);
  } else {
    const std::size_t nvars = gM * gN;
    Matrix K = Matrix::identity(R, nvars);
    Matrix IgN = Matrix::identity(R, gN);
    auto restrict = [&](const Matrix& C, const Matrix& P) {
      Matrix CK = C * K;
      Matrix W;
      if (rN == 0)
        W = kernel(CK);
      else
        W = kernel(hcat(CK, -P)).rows_range(0, K.cols());
      K = K * W;
    };
    if (rM > 0) restrict(kron(Mt.relations.transpose(), IgN), kron(Matrix::identity(R, rM), Nt.relations));
    Matrix P = rN ? kron(Matrix::identity(R, gM), Nt.relations) : Matrix(R, nvars, 0);
    for (std::size_t g : A.generators()) {
      if (K.cols() == 0) break;
      Matrix C = kron(Mt.action[g].transpose(), IgN) - kron(Matrix::identity(R, gM), Nt.action[g]);
      restrict(C, P);
    }
    lattice_ = K;
    solver_.emplace(K);
    const std::size_t l = K.cols();
    if (rN > 0 && l > 0) {
      auto C0 = solver_->solve(P);
      if (!C0) throw std::logic_error("hom_module: null maps not in the solution lattice");
      Tidy pt = tidy(plain_module(R, l, *C0));
      to_new_ = pt.to_new;
      rel_ = pt.module.relations;
      Matrix vecs = K * pt.to_old;
      for (std::size_t j = 0; j < vecs.cols(); ++j) tidy_basis.push_back(Matrix::unvec(vecs.col(j), gN, gM));
    } else {
      to_new_ = Matrix::identity(R, l);
      rel_ = Matrix(R, l, 0);
      for (std::size_t j = 0; j < l; ++j) tidy_basis.push_back(Matrix::unvec(K.col(j), gN, gM));
    }
  }
  for (const auto& X : tidy_basis) basis_.push_back(tN_.to_old * X * tM_.to_new);
  inv_ = cokernel_invariants(rel_.rows() == basis_.size() ? rel_ : Matrix(R, basis_.size(), 0));
}

std::optional<Matrix> HomSpace::coordinates(const Matrix& f) const {
  if (f.rows() != N_.gens || f.cols() != M_.gens) throw ShapeError("HomSpace::coordinates: map shape");
  const BaseRing& R = M_.base;
  Matrix X = tN_.to_new * f * tM_.to_old;
  const Module& Nt = tN_.module;
  if (fast_free_) {
    const std::size_t r = *M_.free_rank, n = M_.algebra->rank(), gN = Nt.gens;
    const auto& u = M_.algebra->unit();
    Matrix c(R, r * gN, 1);
    for (std::size_t l = 0; l < r; ++l)
      for (std::size_t k = 0; k < n; ++k) {
        if (u[k] == 0) continue;
        for (std::size_t t = 0; t < gN; ++t) c.set(l * gN + t, 0, c(l * gN + t, 0) + u[k] * X(t, l * n + k));
      }
    Matrix back(R, gN, X.cols());
    for (std::size_t j = 0; j < c.rows(); ++j)
      if (c(j, 0) != 0)
        for (std::size_t k = 0; k < n; ++k) {
          std::size_t l = j / gN, t = j % gN;
          for (std::size_t a = 0; a < gN; ++a)
            back.set(a, l * n + k, back(a, l * n + k) + c(j, 0) * Nt.action[k](a, t));
        }
    if (!maps_equal(Nt, X, back)) return std::nullopt;
    return c;
  }
  if (lattice_.cols() == 0) {
    if (maps_equal(Nt, X, Matrix(R, X.rows(), X.cols()))) return Matrix(R, 0, 1);
    return std::nullopt;
  }
  auto c0 = solver_->solve(X.vec());
  if (!c0) {
    // X may differ from a lattice point by a map into the relations.
    if (!Nt.has_relations()) return std::nullopt;
    const std::size_t gM = tM_.module.gens;
    Matrix P = kron(Matrix::identity(R, gM), Nt.relations);
    LinearSolver s2(hcat(lattice_, P));
    auto c1 = s2.solve(X.vec());
    if (!c1) return std::nullopt;
    c0 = c1->rows_range(0, lattice_.cols());
  }
  return to_new_ * *c0;
}

Matrix HomSpace::map_from(const Matrix& coeffs) const {
  Matrix f(M_.base, N_.gens, M_.gens);
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (coeffs(k, 0) != 0) f += basis_[k].scaled(coeffs(k, 0));
  return f;
}

Module HomSpace::as_r_module() const { return plain_module(M_.base, basis_.size(), rel_); }

Module HomSpace::as_module(AlgebraPtr B, const std::function<Matrix(std::size_t, const Matrix&)>& act) const {
  std::vector<Matrix> action;
  const std::size_t s = basis_.size();
  for (std::size_t i = 0; i < B->rank(); ++i) {
    Matrix a(M_.base, s, s);
    for (std::size_t k = 0; k < s; ++k) {
      auto c = coordinates(act(i, basis_[k]));
      if (!c) throw std::logic_error("HomSpace::as_module: action leaves the Hom space");
      a.set_block(0, k, *c);
    }
    action.push_back(a);
  }
  return make_module(std::move(B), s, rel_, std::move(action));
}

TensorProduct tensor_over(const Module& B, const Module& M, AlgebraPtr surviving, const std::vector<Matrix>* surviving_action) {
  if (!B.algebra || !M.algebra) throw std::invalid_argument("tensor_over: modules need algebras");
  const FiniteAlgebra& A = *M.algebra;
  if (B.algebra->rank() != A.rank() || B.base != M.base) throw std::invalid_argument("tensor_over: side mismatch");
  {
    // B must be a module over opposite(A).
    const FiniteAlgebra& Bo = *B.algebra;
    for (std::size_t i = 0; i < A.rank(); ++i)
      for (std::size_t j = 0; j < A.rank(); ++j)
        for (std::size_t k = 0; k < A.rank(); ++k)
          if (Bo.c(i, j, k) != A.c(j, i, k)) throw std::invalid_argument("tensor_over: side mismatch");
  }
  const BaseRing& R = M.base;
  const std::size_t gB = B.gens, gM = M.gens, g = gB * gM;
  std::vector<Matrix> rels;
  if (B.has_relations()) rels.push_back(kron(B.relations, Matrix::identity(R, gM)));
  if (M.has_relations()) rels.push_back(kron(Matrix::identity(R, gB), M.relations));
  for (std::size_t a : A.generators())
    rels.push_back(kron(B.action[a], Matrix::identity(R, gM)) - kron(Matrix::identity(R, gB), M.action[a]));
  Module T;
  T.base = R;
  T.gens = g;
  T.relations = rels.empty() ? Matrix(R, g, 0) : hcat(rels, R, g);
  if (surviving) {
    T.algebra = surviving;
    for (const auto& s : *surviving_action) T.action.push_back(kron(s, Matrix::identity(R, gM)));
  }
  Tidy t = tidy(T);
  return {t.module, t.to_new, t.to_old};
}

Module Bimodule::as_left() const {
  const std::size_t nR = right->rank();
  std::vector<Matrix> images;
  for (std::size_t i = 0; i < left->rank(); ++i) {
    Matrix v(left->base(), env->rank(), 1);
    for (std::size_t j = 0; j < nR; ++j) v(i * nR + j, 0) = right->unit()[j];
    images.push_back(v);
  }
  return restrict_scalars(module, left, images);
}

Module Bimodule::as_right() const {
  const std::size_t nR = right->rank(), nL = left->rank();
  std::vector<Matrix> images;
  for (std::size_t j = 0; j < nR; ++j) {
    Matrix v(left->base(), env->rank(), 1);
    for (std::size_t i = 0; i < nL; ++i) v(i * nR + j, 0) = left->unit()[i];
    images.push_back(v);
  }
  return restrict_scalars(module, opposite(right), images);
}

Matrix Bimodule::left_action(std::size_t i) const {
  const std::size_t nR = right->rank();
  Matrix v(left->base(), env->rank(), 1);
  for (std::size_t j = 0; j < nR; ++j) v(i * nR + j, 0) = right->unit()[j];
  return module.act(v);
}

Matrix Bimodule::right_action(std::size_t j) const {
  const std::size_t nR = right->rank(), nL = left->rank();
  Matrix v(left->base(), env->rank(), 1);
  for (std::size_t i = 0; i < nL; ++i) v(i * nR + j, 0) = left->unit()[i];
  return module.act(v);
}

Bimodule make_bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t gens, Matrix relations,
                       const std::vector<Matrix>& left_action, const std::vector<Matrix>& right_action) {
  AlgebraPtr env = (left == right) ? enveloping(left) : tensor_product_algebra(left, opposite(right));
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < left->rank(); ++i)
    for (std::size_t j = 0; j < right->rank(); ++j) act.push_back(left_action[i] * right_action[j]);
  Module m = make_module(env, gens, std::move(relations), std::move(act));
  return {std::move(left), std::move(right), std::move(env), std::move(m)};
}

Bimodule bimodule_from_env(AlgebraPtr left, AlgebraPtr right, AlgebraPtr env, Module module) {
  module.algebra = env;
  return {std::move(left), std::move(right), std::move(env), std::move(module)};
}

Bimodule regular_bimodule(const AlgebraPtr& A) {
  std::vector<Matrix> L, R;
  for (std::size_t i = 0; i < A->rank(); ++i) {
    L.push_back(A->left_mult(i));
    R.push_back(A->right_mult(i));
  }
  return make_bimodule(A, A, A->rank(), Matrix(A->base(), A->rank(), 0), L, R);
}

TensorProduct tensor_bimodule(const Bimodule& B, const Module& M) {
  if (!same_algebra(B.right, M.algebra)) throw std::invalid_argument("tensor_bimodule: side mismatch");
  std::vector<Matrix> lefts;
  for (std::size_t i = 0; i < B.left->rank(); ++i) lefts.push_back(B.left_action(i));
  return tensor_over(B.as_right(), M, B.left, &lefts);
}

std::string to_string(IsoStatus s) {
  switch (s) {
    case IsoStatus::Found: return "found";
    case IsoStatus::CertifiedNonIsomorphic: return "certified non-isomorphic";
    case IsoStatus::NotFoundProbabilistic: return "not found (probabilistic)";
  }
  return "?";
}

namespace {

// Inverse of a bijective module map X: M -> N (tidy modules), or nullopt.
std::optional<Matrix> module_map_inverse(const Module& M, const Module& N, const Matrix& X) {
  const BaseRing& R = M.base;
  if (!M.has_relations() && !N.has_relations()) {
    if (X.rows() != X.cols()) return std::nullopt;
    return inverse(X);
  }
  if (!is_injective_map(M, N, X) || !is_surjective_map(N, X)) return std::nullopt;
  Matrix sys = N.has_relations() ? hcat(X, N.relations) : X;
  auto z = LinearSolver(sys).solve(Matrix::identity(R, N.gens));
  if (!z) return std::nullopt;
  return z->rows_range(0, M.gens);
}

bool verify_iso(const Module& M, const Module& N, const Matrix& f, const Matrix& g) {
  return is_module_map(M, N, f) && is_module_map(N, M, g) && maps_equal(M, g * f, Matrix::identity(M.base, M.gens)) &&
         maps_equal(N, f * g, Matrix::identity(N.base, N.gens));
}

}  // namespace

IsoResult module_iso(const Module& M, const Module& N, std::uint64_t seed) {
  if (!same_algebra(M.algebra, N.algebra)) throw std::invalid_argument("module_iso: algebra mismatch");
  const BaseRing& R = M.base;
  if (invariants(M) != invariants(N))
    return {IsoStatus::CertifiedNonIsomorphic, std::nullopt, std::nullopt, "underlying R-modules differ"};
  Tidy tM = tidy(M), tN = tidy(N);
  const Module& Mt = tM.module;
  const Module& Nt = tN.module;
  if (Mt.gens == 0)
    return {IsoStatus::Found, Matrix(R, N.gens, M.gens), Matrix(R, M.gens, N.gens), "zero modules"};
  HomSpace H(Mt, Nt);
  if (H.size() == 0) return {IsoStatus::CertifiedNonIsomorphic, std::nullopt, std::nullopt, "Hom_A(M,N) = 0"};
  HomSpace E(Mt, Mt);
  if (E.invariants() != H.invariants())
    return {IsoStatus::CertifiedNonIsomorphic, std::nullopt, std::nullopt, "Hom_A(M,N) differs from End_A(M)"};

  auto attempt = [&](const Matrix& coeffs) -> std::optional<IsoResult> {
    Matrix X = H.map_from(coeffs);
    auto Y = module_map_inverse(Mt, Nt, X);
    if (!Y || !verify_iso(Mt, Nt, X, *Y)) return std::nullopt;
    Matrix f = tN.to_old * X * tM.to_new;
    Matrix g = tM.to_old * *Y * tN.to_new;
    if (!verify_iso(M, N, f, g)) throw std::logic_error("module_iso: witness failed in original coordinates");
    return IsoResult{IsoStatus::Found, f, g, "witness verified in both directions"};
  };

  const std::size_t s = H.size();
  if (R.kind() == RingKind::PrimeField) {
    const long p = R.characteristic();
    double total = 1;
    for (std::size_t i = 0; i < s; ++i) total *= static_cast<double>(p);
    if (total <= 65536.0) {
      std::vector<long> digits(s, 0);
      while (true) {
        std::size_t pos = 0;
        while (pos < s && ++digits[pos] == p) digits[pos++] = 0;
        if (pos == s) break;
        Matrix c(R, s, 1);
        for (std::size_t i = 0; i < s; ++i) c(i, 0) = digits[i];
        if (auto r = attempt(c)) return *r;
      }
      return {IsoStatus::CertifiedNonIsomorphic, std::nullopt, std::nullopt,
              "exhaustive search of Hom_A(M,N) found no isomorphism"};
    }
  }
  for (std::size_t i = 0; i < s; ++i)
    if (auto r = attempt(Matrix::unit_column(R, s, i))) return *r;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j) {
      Matrix c(R, s, 1);
      c(i, 0) = 1;
      c.set(j, 0, Scalar(1));
      if (auto r = attempt(c)) return *r;
      c.set(j, 0, Scalar(-1));
      if (auto r = attempt(c)) return *r;
    }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int trial = 0; trial < 64; ++trial) {
    Matrix c(R, s, 1);
    for (std::size_t i = 0; i < s; ++i) c.set(i, 0, Scalar(coef(rng)));
    if (auto r = attempt(c)) return *r;
  }
  return {IsoStatus::NotFoundProbabilistic, std::nullopt, std::nullopt, "no invertible map among sampled elements"};
}

BaseDual dual_over_base(const Module& M) {
  Tidy t = tidy(M);
  if (t.module.has_relations()) throw std::invalid_argument("dual_over_base: torsion lattice required");
  Module D;
  D.base = M.base;
  D.algebra = opposite(M.algebra);
  D.gens = t.module.gens;
  D.relations = Matrix(M.base, D.gens, 0);
  for (const auto& a : t.module.action) D.action.push_back(a.transpose());
  return {D, t.to_new};
}

AlgebraDual dual_over_algebra(const Module& M) {
  const AlgebraPtr& A = M.algebra;
  HomSpace H(M, regular_module(A));
  Module D = H.as_module(opposite(A), [&](std::size_t i, const Matrix& X) { return A->right_mult(i) * X; });
  return {D, H};
}

Matrix dual_map(const AlgebraDual& U, const AlgebraDual& V, const Matrix& f) {
  const BaseRing& R = U.dual.base;
  Matrix out(R, U.space.size(), V.space.size());
  for (std::size_t k = 0; k < V.space.size(); ++k) {
    auto c = U.space.coordinates(V.space.basis()[k] * f);
    if (!c) throw std::logic_error("dual_map: composite is not A-linear");
    out.set_block(0, k, *c);
  }
  return out;
}

Matrix biduality_map(const AlgebraDual& Md, const AlgebraDual& Mdd) {
  const Module& M = Md.space.source();
  const BaseRing& R = M.base;
  const std::size_t n = M.algebra->rank();
  Matrix out(R, Mdd.space.size(), M.gens);
  for (std::size_t t = 0; t < M.gens; ++t) {
    Matrix ev(R, n, Md.space.size());
    for (std::size_t k = 0; k < Md.space.size(); ++k) ev.set_block(0, k, Md.space.basis()[k].col(t));
    auto c = Mdd.space.coordinates(ev);
    if (!c) throw std::logic_error("biduality_map: evaluation is not linear");
    out.set_block(0, t, *c);
  }
  return out;
}

}  // namespace gorlab
