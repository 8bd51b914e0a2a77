#include "gorlab/approximation.hpp"

#include "gorlab/gorenstein.hpp"

namespace gorlab {

bool ApproximationTriple::certified() const {
  return exact && x_verdict.yes() && y_dimension.kind == Finiteness::Finite;
}

namespace {

// An A-linear f: U -> V with f * c = target modulo the relations of V.
Matrix extend_along(const Module& U, const Module& V, const Matrix& c, const Matrix& target) {
  const BaseRing& R = U.base;
  HomSpace H(U, V);
  const std::size_t w = c.cols();
  std::vector<Matrix> cols;
  for (const auto& B : H.basis()) cols.push_back((B * c).vec());
  for (std::size_t t = 0; t < w; ++t)
    for (std::size_t r = 0; r < V.relations.cols(); ++r) {
      Matrix E(R, V.gens, w);
      E.set_block(0, t, V.relations.col(r));
      cols.push_back(E.vec());
    }
  Matrix sys = hcat(cols, R, V.gens * w);
  auto sol = solve_linear(sys, target.vec());
  if (!sol) throw std::logic_error("gprojective_approximation: chain map does not extend");
  return H.map_from(sol->rows_range(0, H.size()));
}

bool zero_map(const Module& N, const Matrix& f) { return maps_equal(N, f, Matrix(N.base, f.rows(), f.cols())); }

void finish(ApproximationTriple& T, int depth) {
  const Module& M = T.target;
  T.exact = is_surjective_map(M, T.epi) && is_injective_map(T.finite_part, T.gprojective_part, T.mono) &&
            zero_map(M, T.epi * T.mono) &&
            invariants(kernel_of(T.gprojective_part, M, T.epi).module) == invariants(T.finite_part);
  T.x_verdict = is_gprojective(T.gprojective_part, depth);
  T.y_dimension = proj_dim(T.finite_part, depth);
}

}  // namespace

ApproximationTriple gprojective_approximation(const Module& M, int depth) {
  const BaseRing& R = M.base;
  ApproximationTriple T;
  T.target = M;
  GProjVerdict g0 = is_gprojective(M, depth);
  if (g0.yes()) {
    T.gprojective_part = M;
    T.finite_part = zero_module(M.algebra);
    T.epi = Matrix::identity(R, M.gens);
    T.mono = Matrix(R, M.gens, 0);
    finish(T, depth);
    return T;
  }
  Resolution res = projective_resolution(M, 1);
  std::vector<std::string> tried{"Omega^0: " + to_string(g0.answer) + " (" + g0.detail + ")"};
  int n = 0;
  for (int k = 1; k <= depth; ++k) {
    while (res.syzygies.size() <= static_cast<std::size_t>(k) && !res.terminated) res.extend();
    if (static_cast<std::size_t>(k) >= res.syzygies.size() || is_zero(res.syzygies[static_cast<std::size_t>(k)])) {
      n = k;
      break;
    }
    GProjVerdict g = is_gprojective(res.syzygies[static_cast<std::size_t>(k)], depth);
    if (g.yes()) {
      n = k;
      break;
    }
    tried.push_back("Omega^" + std::to_string(k) + ": " + to_string(g.answer) + " (" + g.detail + ")");
  }
  if (n == 0) {
    std::string msg = "gprojective_approximation: no syzygy certified G-projective within depth";
    for (const auto& t : tried) msg += "; " + t;
    throw std::runtime_error(msg);
  }
  T.steps = n;
  while (res.terms.size() < static_cast<std::size_t>(n) && !res.terminated) res.extend();
  const Module& P0 = res.terms[0];
  const std::size_t un = static_cast<std::size_t>(n);
  const bool trivial = un >= res.syzygies.size() || is_zero(res.syzygies[un]);
  if (trivial) {
    T.gprojective_part = P0;
    T.epi = res.augmentation;
  } else {
    const Module& K = res.syzygies[un];
    CompleteResolution C = complete_resolution(K, 1, n, depth, true);
    const ChainComplex& X = C.window;
    auto P = [&](int i) -> const Module& { return res.terms[static_cast<std::size_t>(i)]; };
    // Chain map phi^j: X^j -> P_{n-j} lifting the identity of K.
    Matrix phi = extend_along(X.at(1), P(n - 1), X.d(0), res.inclusions[un - 1] * C.augmentation);
    for (int j = 1; j < n; ++j)
      phi = extend_along(X.at(j + 1), P(n - j - 1), X.d(j), res.diffs[static_cast<std::size_t>(n - j - 1)] * phi);
    Module Q = X.at(n);
    Q.relations = Q.has_relations() ? hcat(Q.relations, X.d(n - 1)) : X.d(n - 1);
    Q.free_rank.reset();
    Tidy t = tidy(Q);
    Matrix psi = res.augmentation * phi * t.to_old;
    if (is_surjective_map(M, psi)) {
      T.gprojective_part = t.module;
      T.epi = psi;
      T.cover_dropped = true;
    } else {
      T.gprojective_part = direct_sum(P0, t.module);
      T.epi = hcat(res.augmentation, psi);
    }
  }
  Submodule Y = kernel_of(T.gprojective_part, M, T.epi);
  T.finite_part = Y.module;
  T.mono = Y.inclusion;
  finish(T, depth);
  return T;
}

namespace {

struct Plain {
  Module module;
  Matrix to_new, to_old;
};

// Tidy with no relations left (field base).
Plain untangle(const Module& M) {
  Tidy t = tidy(M);
  if (t.module.has_relations()) throw std::logic_error("ginjective_approximation_artin: relations survive over a field");
  return {t.module, t.to_new, t.to_old};
}

Module base_dual(const Module& M, const AlgebraPtr& A) { return with_algebra(dual_over_base(M).dual, A); }

}  // namespace

CoapproximationTriple ginjective_approximation_artin(const Module& M, int depth) {
  if (!M.base.is_field()) throw std::invalid_argument("ginjective_approximation_artin: Artin base required");
  const AlgebraPtr& A = M.algebra;
  CoapproximationTriple C;
  C.target = M;
  Plain m = untangle(M);
  BaseDual Dm = dual_over_base(m.module);
  C.dual = gprojective_approximation(Dm.dual, depth);
  const ApproximationTriple& t = C.dual;
  Plain x = untangle(t.gprojective_part), y = untangle(t.finite_part);
  Matrix epi = t.epi * x.to_old;                  // X' -> DM
  Matrix mono = x.to_new * t.mono * y.to_old;     // Y' -> X'
  C.ginjective_part = base_dual(x.module, A);
  C.finite_part = base_dual(y.module, A);
  C.mono = epi.transpose() * Dm.biduality * m.to_new;
  C.epi = mono.transpose();
  C.exact = is_injective_map(M, C.ginjective_part, C.mono) && is_surjective_map(C.finite_part, C.epi) &&
            zero_map(C.finite_part, C.epi * C.mono) &&
            invariants(C.ginjective_part).free_rank == invariants(M).free_rank + invariants(C.finite_part).free_rank &&
            is_module_map(M, C.ginjective_part, C.mono) && is_module_map(C.ginjective_part, C.finite_part, C.epi);
  return C;
}

Module serre_operator(const Module& M, int d, int depth) {
  ApproximationTriple t = gprojective_approximation(conakayama(M), depth);
  return stable_syzygy(t.gprojective_part, 1 - d, depth);
}

NakayamaSquareReport verify_nakayama_square(const Module& M, int depth) {
  NakayamaSquareReport r;
  ApproximationTriple t = gprojective_approximation(conakayama(M), depth);
  FinitenessVerdict y = proj_dim(t.finite_part, depth);
  r.y_projective = y.kind == Finiteness::Finite && y.value == 0;
  ApproximationTriple back = gprojective_approximation(nakayama(t.gprojective_part), depth);
  r.round_trip = stably_isomorphic(back.gprojective_part, M);
  r.detail = "GP(omega (x) M) after " + std::to_string(t.steps) + " steps, Y-part " + y.to_string() +
             "; round trip rank " + std::to_string(invariants(back.gprojective_part).free_rank);
  return r;
}

}  // namespace gorlab
