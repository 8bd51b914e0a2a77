#include "gorlab/module.hpp"

#include <stdexcept>

namespace gorlab {

Matrix Module::act(const Matrix& a) const {
  Matrix m(base, gens, gens);
  for (std::size_t i = 0; i < action.size(); ++i)
    if (a(i, 0) != 0) m += action[i].scaled(a(i, 0));
  return m;
}

Module make_module(AlgebraPtr A, std::size_t gens, Matrix relations, std::vector<Matrix> action) {
  if (!A) throw std::invalid_argument("make_module: null algebra");
  if (action.size() != A->rank()) throw std::invalid_argument("make_module: need one action matrix per basis element");
  Module M;
  M.base = A->base();
  M.algebra = std::move(A);
  M.gens = gens;
  if (relations.rows() != gens) {
    if (relations.cols() == 0 && relations.rows() == 0)
      relations = Matrix(M.base, gens, 0);
    else
      throw std::invalid_argument("make_module: relation rows must equal generator count");
  }
  M.relations = relations.normalized();
  for (auto& a : action) {
    if (a.rows() != gens || a.cols() != gens) throw std::invalid_argument("make_module: action matrix shape");
    M.action.push_back(a.normalized());
  }
  return M;
}

Module plain_module(const BaseRing& base, std::size_t gens, Matrix relations) {
  Module M;
  M.base = base;
  M.gens = gens;
  M.relations = relations.rows() == gens ? relations : Matrix(base, gens, 0);
  return M;
}

Module zero_module(AlgebraPtr A) {
  std::vector<Matrix> act(A->rank(), Matrix(A->base(), 0, 0));
  Module M = make_module(A, 0, Matrix(A->base(), 0, 0), act);
  M.free_rank = 0;
  return M;
}

Module free_module(AlgebraPtr A, std::size_t r) {
  const std::size_t n = A->rank();
  std::vector<Matrix> act;
  act.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(A->base(), n * r, n * r);
    for (std::size_t l = 0; l < r; ++l) m.set_block(l * n, l * n, A->left_mult(i));
    act.push_back(std::move(m));
  }
  Module M = make_module(A, n * r, Matrix(A->base(), n * r, 0), std::move(act));
  M.free_rank = r;
  return M;
}

Module regular_module(AlgebraPtr A) { return free_module(std::move(A), 1); }

Module with_algebra(const Module& M, AlgebraPtr A) {
  if (!same_algebra(M.algebra, A)) throw std::invalid_argument("with_algebra: algebras differ");
  Module N = M;
  N.algebra = std::move(A);
  return N;
}

bool in_relation_span(const Module& N, const Matrix& v) {
  if (v.is_zero()) return true;
  if (!N.has_relations()) return false;
  return LinearSolver(N.relations).contains(v);
}

bool maps_equal(const Module& N, const Matrix& f, const Matrix& g) { return in_relation_span(N, f - g); }

std::vector<std::string> check_module(const Module& M) {
  std::vector<std::string> problems;
  if (!M.algebra) return problems;
  const FiniteAlgebra& A = *M.algebra;
  if (M.action.size() != A.rank()) {
    problems.push_back("wrong number of action matrices");
    return problems;
  }
  std::optional<LinearSolver> rel;
  if (M.has_relations()) rel.emplace(M.relations);
  auto zero_mod = [&](const Matrix& v) { return v.is_zero() || (rel && rel->contains(v)); };
  for (std::size_t i = 0; i < A.rank(); ++i)
    if (M.has_relations() && !zero_mod(M.action[i] * M.relations))
      problems.push_back("action of e" + std::to_string(i) + " does not preserve relations");
  for (std::size_t i = 0; i < A.rank(); ++i)
    for (std::size_t j = 0; j < A.rank(); ++j) {
      Matrix lhs = M.action[i] * M.action[j];
      Matrix rhs(M.base, M.gens, M.gens);
      for (std::size_t k = 0; k < A.rank(); ++k)
        if (A.c(i, j, k) != 0) rhs += M.action[k].scaled(A.c(i, j, k));
      if (!zero_mod(lhs - rhs))
        problems.push_back("action not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  if (!zero_mod(M.act(A.unit_vector()) - Matrix::identity(M.base, M.gens))) problems.push_back("unit does not act as identity");
  return problems;
}

bool is_module_map(const Module& M, const Module& N, const Matrix& f) {
  if (f.rows() != N.gens || f.cols() != M.gens) return false;
  if (M.has_relations() && !in_relation_span(N, f * M.relations)) return false;
  for (std::size_t g : M.algebra->generators())
    if (!in_relation_span(N, f * M.action[g] - N.action[g] * f)) return false;
  return true;
}

RInvariants invariants(const Module& M) { return cokernel_invariants(M.relations.rows() == M.gens ? M.relations : Matrix(M.base, M.gens, 0)); }

bool is_zero(const Module& M) { return invariants(M).is_zero(); }

namespace {

Module transport(const Module& M, const Matrix& to_new, const Matrix& to_old, Matrix new_rel) {
  Module N;
  N.base = M.base;
  N.algebra = M.algebra;
  N.gens = to_new.rows();
  N.relations = std::move(new_rel);
  N.action.reserve(M.action.size());
  for (const auto& a : M.action) N.action.push_back(to_new * a * to_old);
  return N;
}

// Reduce entries of rows carrying a relation d * e_pos into [0, d).
void reduce_rows(Module& N) {
  if (!N.base.is_integers()) return;
  for (std::size_t c = 0; c < N.relations.cols(); ++c) {
    std::size_t pos = N.gens;
    for (std::size_t r = 0; r < N.gens; ++r)
      if (N.relations(r, c) != 0) pos = r;
    if (pos == N.gens) continue;
    mpz_class d = N.relations(pos, c).get_num();
    for (auto& a : N.action)
      for (std::size_t j = 0; j < N.gens; ++j) {
        mpz_class v = a(pos, j).get_num() % d;
        if (v < 0) v += d;
        a(pos, j) = Scalar(v);
      }
  }
}

}  // namespace

Tidy tidy(const Module& M) {
  const BaseRing& R = M.base;
  if (!M.has_relations()) return {M, Matrix::identity(R, M.gens), Matrix::identity(R, M.gens)};
  if (R.is_field()) {
    ColumnEchelon e = column_echelon(M.relations);
    const std::size_t k = e.rank;
    if (k == 0) {
      Module N = M;
      N.relations = Matrix(R, M.gens, 0);
      return {N, Matrix::identity(R, M.gens), Matrix::identity(R, M.gens)};
    }
    std::vector<bool> pivot(M.gens, false);
    for (std::size_t r : e.pivot_rows) pivot[r] = true;
    std::vector<std::size_t> free_rows;
    for (std::size_t r = 0; r < M.gens; ++r)
      if (!pivot[r]) free_rows.push_back(r);
    Matrix comp(R, M.gens, free_rows.size());
    for (std::size_t j = 0; j < free_rows.size(); ++j) comp(free_rows[j], j) = 1;
    Matrix T = hcat(e.echelon.cols_range(0, k), comp);
    Matrix Tinv = *inverse(T);
    Matrix to_new = Tinv.rows_range(k, M.gens);
    Module N = transport(M, to_new, comp, Matrix(R, free_rows.size(), 0));
    return {N, to_new, comp};
  }
  SmithForm s = smith_normal_form(M.relations);
  std::vector<std::size_t> kept;
  std::vector<mpz_class> mods;
  for (std::size_t i = 0; i < M.gens; ++i) {
    if (i < s.rank && s.D(i, i) == 1) continue;
    kept.push_back(i);
  }
  Matrix to_new = s.U.select_rows(kept);
  Matrix to_old = s.U_inverse.select_cols(kept);
  std::vector<Matrix> rel_cols;
  for (std::size_t t = 0; t < kept.size(); ++t)
    if (kept[t] < s.rank) {
      Matrix col(R, kept.size(), 1);
      col(t, 0) = s.D(kept[t], kept[t]);
      rel_cols.push_back(col);
    }
  Matrix rel = rel_cols.empty() ? Matrix(R, kept.size(), 0) : hcat(rel_cols, R, kept.size());
  Module N = transport(M, to_new, to_old, rel);
  reduce_rows(N);
  return {N, to_new, to_old};
}

Submodule r_submodule(const Module& N, const Matrix& S) {
  const BaseRing& R = N.base;
  Matrix L = image_basis(N.has_relations() ? hcat(S, N.relations) : S);
  const std::size_t l = L.cols();
  Module K;
  K.base = R;
  K.algebra = N.algebra;
  K.gens = l;
  if (l == 0) {
    K.relations = Matrix(R, 0, 0);
    K.action.assign(N.action.size(), Matrix(R, 0, 0));
    return {K, Matrix(R, N.gens, 0)};
  }
  LinearSolver solver(L);
  if (N.has_relations()) {
    auto c = solver.solve(N.relations);
    if (!c) throw std::logic_error("r_submodule: relations not in span");
    K.relations = *c;
  } else {
    K.relations = Matrix(R, l, 0);
  }
  K.action.reserve(N.action.size());
  for (const auto& a : N.action) {
    auto c = solver.solve(a * L);
    if (!c) throw std::logic_error("r_submodule: span is not stable under the algebra");
    K.action.push_back(*c);
  }
  Tidy t = tidy(K);
  return {t.module, L * t.to_old};
}

Submodule a_submodule(const Module& N, const Matrix& S) {
  std::vector<Matrix> parts;
  for (const auto& a : N.action) parts.push_back(a * S);
  if (parts.empty()) return r_submodule(N, S);
  return r_submodule(N, hcat(parts, N.base, N.gens));
}

Quotient quotient(const Module& N, const Matrix& S) {
  std::vector<Matrix> parts{N.relations};
  for (const auto& a : N.action) parts.push_back(a * S);
  if (N.action.empty()) parts.push_back(S);
  Module Q = N;
  Q.relations = hcat(parts, N.base, N.gens);
  Q.free_rank.reset();
  Tidy t = tidy(Q);
  return {t.module, t.to_new};
}

Submodule kernel_of(const Module& M, const Module& N, const Matrix& f) {
  if (f.rows() != N.gens || f.cols() != M.gens) throw ShapeError("kernel_of: map shape");
  Matrix W;
  if (!N.has_relations()) {
    W = kernel(f);
  } else {
    Matrix K = kernel(hcat(f, -N.relations));
    W = K.rows_range(0, M.gens);
  }
  return r_submodule(M, W);
}

Quotient cokernel_of(const Module& N, const Matrix& f) {
  Module Q = N;
  Q.relations = N.has_relations() ? hcat(N.relations, f) : f;
  Q.free_rank.reset();
  Tidy t = tidy(Q);
  return {t.module, t.to_new};
}

Submodule image_of(const Module& N, const Matrix& f) { return r_submodule(N, f); }

bool is_injective_map(const Module& M, const Module& N, const Matrix& f) { return is_zero(kernel_of(M, N, f).module); }

bool is_surjective_map(const Module& N, const Matrix& f) { return is_zero(cokernel_of(N, f).module); }

DirectSum direct_sum(const std::vector<Module>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of nothing");
  const BaseRing& R = parts[0].base;
  DirectSum out;
  Module& S = out.module;
  S.base = R;
  S.algebra = parts[0].algebra;
  std::size_t g = 0;
  bool all_free = true;
  std::size_t free_total = 0;
  for (const auto& p : parts) {
    if (!same_algebra(p.algebra, S.algebra)) throw std::invalid_argument("direct_sum: algebra mismatch");
    g += p.gens;
    if (p.free_rank)
      free_total += *p.free_rank;
    else
      all_free = false;
  }
  S.gens = g;
  std::vector<Matrix> rels;
  std::size_t off = 0;
  for (const auto& p : parts) {
    Matrix r(R, g, p.relations.cols());
    r.set_block(off, 0, p.relations);
    rels.push_back(r);
    Matrix inc(R, g, p.gens), proj(R, p.gens, g);
    for (std::size_t i = 0; i < p.gens; ++i) {
      inc(off + i, i) = 1;
      proj(i, off + i) = 1;
    }
    out.inclusions.push_back(inc);
    out.projections.push_back(proj);
    off += p.gens;
  }
  S.relations = hcat(rels, R, g);
  const std::size_t nact = parts[0].action.size();
  for (std::size_t i = 0; i < nact; ++i) {
    Matrix a(R, g, g);
    off = 0;
    for (const auto& p : parts) {
      a.set_block(off, off, p.action[i]);
      off += p.gens;
    }
    S.action.push_back(a);
  }
  if (all_free) S.free_rank = free_total;
  return out;
}

Module direct_sum(const Module& M, const Module& N) { return direct_sum(std::vector<Module>{M, N}).module; }

Module cyclic_quotient(AlgebraPtr A, const std::vector<Matrix>& elements) {
  Module F = regular_module(A);
  if (elements.empty()) return F;
  return quotient(F, hcat(elements, A->base(), A->rank())).module;
}

Module restrict_scalars(const Module& M, AlgebraPtr B, const std::vector<Matrix>& images) {
  if (images.size() != B->rank()) throw std::invalid_argument("restrict_scalars: one image per basis element");
  Module N;
  N.base = M.base;
  N.algebra = std::move(B);
  N.gens = M.gens;
  N.relations = M.relations;
  for (const auto& im : images) N.action.push_back(M.act(im));
  return N;
}

}  // namespace gorlab
