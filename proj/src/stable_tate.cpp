#include "gorlab/stable_tate.hpp"

#include "gorlab/approximation.hpp"
#include "gorlab/gorenstein.hpp"

#include <algorithm>
#include <sstream>

namespace gorlab {

std::string to_string(GAnswer a) {
  switch (a) {
    case GAnswer::Yes: return "Yes";
    case GAnswer::No: return "No";
    case GAnswer::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

bool is_projective(const Module& M) {
  FinitenessVerdict v = proj_dim(M, 1);
  return v.kind == Finiteness::Finite && v.value == 0;
}

int first_nonzero(const GradedGroups& g, int from) {
  for (const auto& [d, inv] : g.groups)
    if (d >= from && !inv.is_zero()) return d;
  return -1;
}

}  // namespace

GProjVerdict is_gprojective(const Module& M, int depth) {
  GProjVerdict v;
  const AlgebraPtr& A = M.algebra;
  const BaseRing& R = M.base;
  if (!R.is_field() && !invariants(M).torsion.empty()) {
    v.answer = GAnswer::No;
    v.witness = 0;
    v.detail = "not a lattice: G-projectives embed in free modules";
    return v;
  }
  int need = -1;
  if (!R.is_field() && A->injdim_bound) {
    need = *A->injdim_bound + 1;
    v.closure = "declared local injective dimension " + std::to_string(*A->injdim_bound) +
                " closes the tail at degree " + std::to_string(need);
  }
  if (need < 0 && R.is_field()) {
    // Ext^i(-, A) vanishes above the injective dimension of A.
    GorensteinVerdict g = gorenstein_check(A, depth);
    if (g.status == GorensteinStatus::Gorenstein && !g.dimensions.empty()) {
      int d = 0;
      for (const auto& s : g.dimensions) d = std::max({d, s.left, s.right});
      need = d;
      v.closure = "injective dimension " + std::to_string(d) + " of A (Gorenstein verdict)";
    }
  }
  if (need < 0) {
    FinitenessVerdict pd = proj_dim(M, depth);
    if (pd.kind == Finiteness::Finite) {
      need = pd.value;
      v.closure = "finite projective dimension " + std::to_string(pd.value);
    } else if (pd.kind == Finiteness::InfiniteCertified) {
      need = pd.b;
      v.closure = "syzygy recurrence " + pd.certificate + ": Ext^{i+" + std::to_string(pd.b) + "} = (Ext^{i+" +
                  std::to_string(pd.a) + "})^" + std::to_string(pd.multiplicity) + " for i >= 1";
    }
  }
  const bool closed = need >= 0 && need <= depth;
  if (!closed) {
    v.detail = "no closure argument within depth " + std::to_string(depth);
    v.answer = GAnswer::Inconclusive;
  }
  const int top = std::max(need, 1);
  // Beyond the closure degree the vanishing is implied; without a closure search for a witness up to depth.
  const int range = closed ? top : depth;
  // Low degrees first: most non-G-projectives are caught there cheaply.
  for (int r : {std::min({top, range, 2}), range}) {
    GradedGroups e = ext(M, regular_module(A), r);
    v.checked = r;
    if (int w = first_nonzero(e, 1); w >= 1) {
      v.answer = GAnswer::No;
      v.witness = w;
      v.detail = "Ext^" + std::to_string(w) + "(M, A) = " + e.at(w)->to_string();
      return v;
    }
    if (r == range) break;
  }
  if (v.answer == GAnswer::Inconclusive && !v.detail.empty()) return v;
  AlgebraDual Md = dual_over_algebra(M);
  AlgebraDual Mdd = dual_over_algebra(Md.dual);
  Matrix ev = biduality_map(Md, Mdd);
  if (!is_injective_map(M, Mdd.dual, ev) || !is_surjective_map(Mdd.dual, ev)) {
    v.answer = GAnswer::No;
    v.detail = "M -> M** is not bijective";
    return v;
  }
  GradedGroups ed = ext(Md.dual, regular_module(Md.dual.algebra), top);
  if (int w = first_nonzero(ed, 1); w >= 1) {
    v.answer = GAnswer::No;
    v.detail = "Ext^" + std::to_string(w) + "(M*, A) != 0";
    return v;
  }
  v.answer = GAnswer::Yes;
  v.detail = "Ext^i(M, A) = 0 for 1 <= i <= " + std::to_string(range) + "; M -> M** bijective; Ext^i(M*, A) = 0 for 1 <= i <= " +
             std::to_string(top);
  return v;
}

ChainComplex truncate(const ChainComplex& X, int lo, int hi) {
  if (!X.in_window(lo) || !X.in_window(hi) || lo > hi) throw std::out_of_range("truncate: outside window");
  ChainComplex Y;
  Y.lo = lo;
  for (int d = lo; d <= hi; ++d) Y.terms.push_back(X.at(d));
  for (int d = lo; d < hi; ++d) Y.diffs.push_back(X.d(d));
  return Y;
}

CompleteResolution complete_resolution(const Module& M, int n, int m, int depth, bool certified) {
  if (n < 1 || m < 1) throw std::invalid_argument("complete_resolution: window must contain degrees -1 and 1");
  if (!certified) {
    GProjVerdict g = is_gprojective(M, depth);
    if (!g.yes()) throw std::invalid_argument("complete_resolution: module not certified G-projective (" + to_string(g.answer) + ": " + g.detail + ")");
  }
  const AlgebraPtr& A = M.algebra;
  const BaseRing& R = M.base;
  CompleteResolution C;
  C.module = M;
  Resolution right = projective_resolution(M, static_cast<std::size_t>(n));
  AlgebraDual Md = dual_over_algebra(M);
  AlgebraDual Mdd = dual_over_algebra(Md.dual);
  Matrix ev = biduality_map(Md, Mdd);
  Resolution left = projective_resolution(Md.dual, static_cast<std::size_t>(m - 1));
  std::vector<AlgebraDual> Qd;
  for (std::size_t j = 0; j < static_cast<std::size_t>(m); ++j)
    Qd.push_back(dual_over_algebra(j < left.terms.size() ? left.terms[j] : zero_module(Md.dual.algebra)));

  ChainComplex& X = C.window;
  X.lo = -n;
  auto P = [&](int i) { return static_cast<std::size_t>(i) < right.terms.size() ? right.terms[static_cast<std::size_t>(i)] : zero_module(A); };
  for (int i = n; i >= 0; --i) X.terms.push_back(P(i));
  for (int j = 1; j <= m; ++j) X.terms.push_back(with_algebra(Qd[static_cast<std::size_t>(j - 1)].dual, A));
  for (int i = n; i >= 1; --i) {
    const std::size_t k = static_cast<std::size_t>(i - 1);
    X.diffs.push_back(k < right.diffs.size() ? right.diffs[k] : Matrix(R, P(i - 1).gens, P(i).gens));
  }
  C.augmentation = right.augmentation;
  C.coaugmentation = dual_map(Qd[0], Mdd, left.augmentation) * ev;
  X.diffs.push_back(C.coaugmentation * right.augmentation);
  for (int j = 1; j < m; ++j) {
    const std::size_t k = static_cast<std::size_t>(j - 1);
    const Module& src = X.at(j);
    const Module& dst = X.at(j + 1);
    X.diffs.push_back(k < left.diffs.size() ? dual_map(Qd[k + 1], Qd[k], left.diffs[k]) : Matrix(R, dst.gens, src.gens));
  }
  if (auto p = check_complex(X); !p.empty()) throw std::logic_error("complete_resolution: " + p.front());
  C.exact = true;
  for (int d = X.lo + 1; d < X.hi(); ++d) C.exact = C.exact && exact_at(X, d);
  ChainComplex H = hom_complex(X, regular_module(A));
  C.totally_acyclic = true;
  for (int d = H.lo + 1; d < H.hi(); ++d) C.totally_acyclic = C.totally_acyclic && exact_at(H, d);
  if (!C.exact || !C.totally_acyclic) throw std::logic_error("complete_resolution: window fails acyclicity");
  return C;
}

CompleteResolution CompleteResolution::widened(int n2, int m2) const {
  return complete_resolution(module, std::max(n(), n2), std::max(m(), m2), 12, true);
}

TateGroups tate_ext(const Module& M, const Module& N, int lo, int hi, int depth) {
  if (lo > hi) throw std::invalid_argument("tate_ext: empty range");
  TateGroups out;
  out.groups.base = M.base;
  Module X = M;
  GProjVerdict g = is_gprojective(M, depth);
  if (g.answer == GAnswer::Inconclusive) throw std::runtime_error("tate_ext: G-projectivity undecided: " + g.detail);
  if (!g.yes()) {
    ApproximationTriple t = gprojective_approximation(M, depth);
    X = t.gprojective_part;
    out.approximated = true;
    out.note = "first argument replaced by its G-projective approximation (" + std::to_string(t.steps) + " syzygy steps)";
  }
  CompleteResolution C = complete_resolution(X, std::max(1, hi + 1), std::max(1, 1 - lo), depth, true);
  ChainComplex H = hom_complex(C.window, N);
  for (int i = lo; i <= hi; ++i) out.groups.groups.push_back({i, homology(H, i)});
  return out;
}

bool StableHom::is_null(const Matrix& f) const {
  auto c = space.coordinates(f);
  if (!c) throw std::invalid_argument("StableHom::is_null: not a module map");
  if (c->is_zero()) return true;
  Matrix span = hcat(space.relations(), null);
  if (span.cols() == 0) return false;
  return LinearSolver(span).contains(*c);
}

Matrix StableHom::class_of(const Matrix& f) const {
  auto c = space.coordinates(f);
  if (!c) throw std::invalid_argument("StableHom::class_of: not a module map");
  return to_new * *c;
}

StableHom stable_hom_via(const Module& M, const Module& N, const Module& P, const Matrix& cover) {
  const BaseRing& R = M.base;
  HomSpace H(M, N);
  HomSpace HP(M, P);
  Matrix null(R, H.size(), HP.size());
  for (std::size_t k = 0; k < HP.size(); ++k) {
    auto c = H.coordinates(cover * HP.basis()[k]);
    if (!c) throw std::logic_error("stable_hom: composite is not A-linear");
    null.set_block(0, k, *c);
  }
  Module Q = plain_module(R, H.size(), hcat(H.relations(), null));
  Tidy t = tidy(Q);
  std::vector<Matrix> reps;
  for (std::size_t j = 0; j < t.module.gens; ++j) reps.push_back(H.map_from(t.to_old.col(j)));
  RInvariants inv = invariants(t.module);
  return StableHom{std::move(H), null, t.module, t.to_new, inv, reps};
}

StableHom stable_hom(const Module& M, const Module& N) {
  ProjectiveCover pc = projective_cover(N);
  return stable_hom_via(M, N, pc.projective, pc.map);
}

Module stable_syzygy(const Module& M, int i, int depth) {
  if (i == 0) return M;
  const int n = i > 0 ? i + 1 : 1;
  const int m = i > 0 ? 1 : -i;
  CompleteResolution C = complete_resolution(M, n, m, depth);
  const int deg = -i;
  return cokernel_of(C.window.at(deg), C.window.d(deg - 1)).module;
}

namespace {

// Elements of a finite stable Hom group as maps, or nullopt when it is infinite or larger than cap.
std::optional<std::vector<Matrix>> enumerate(const StableHom& S, std::size_t cap) {
  const BaseRing& R = S.module.base;
  if (R.is_field() && R.kind() != RingKind::PrimeField) return std::nullopt;
  std::vector<long> orders(S.module.gens, R.is_field() ? R.characteristic() : 0);
  if (!R.is_field()) {
    const Matrix& rel = S.module.relations;
    for (std::size_t c = 0; c < rel.cols(); ++c)
      for (std::size_t i = 0; i < rel.rows(); ++i)
        if (rel(i, c) != 0) {
          mpz_class d = abs(rel(i, c).get_num());
          if (!d.fits_slong_p()) return std::nullopt;
          orders[i] = d.get_si();
        }
    for (long o : orders)
      if (o == 0) return std::nullopt;
  }
  std::size_t total = 1;
  for (long o : orders) {
    total *= static_cast<std::size_t>(o);
    if (total > cap) return std::nullopt;
  }
  const Matrix zero(R, S.space.target().gens, S.space.source().gens);
  std::vector<Matrix> out;
  std::vector<long> c(orders.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    Matrix f = zero;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j]) f += S.representatives[j].scaled(Scalar(c[j]));
    out.push_back(f.normalized());
    for (std::size_t j = 0; j < c.size() && ++c[j] == orders[j]; ++j) c[j] = 0;
  }
  return out;
}

}  // namespace

bool stably_isomorphic(const Module& M, const Module& N) {
  const bool pm = is_projective(M), pn = is_projective(N);
  if (pm || pn) return pm && pn;
  const RInvariants im = invariants(M), in = invariants(N);
  if (im.torsion != in.torsion) return false;
  const std::size_t r = M.algebra->rank();
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b) {
      if (im.free_rank + a * r != in.free_rank + b * r) continue;
      Module X = a ? direct_sum(M, free_module(M.algebra, a)) : M;
      Module Y = b ? direct_sum(N, free_module(N.algebra, b)) : N;
      if (module_iso(X, Y).found()) return true;
    }
  // Finite stable Hom groups: look for mutually inverse stable maps.
  StableHom mn = stable_hom(M, N), nm = stable_hom(N, M), mm = stable_hom(M, M), nn = stable_hom(N, N);
  auto fs = enumerate(mn, 256), gs = enumerate(nm, 256);
  if (!fs || !gs) return false;
  const Matrix iM = Matrix::identity(M.base, M.gens), iN = Matrix::identity(N.base, N.gens);
  for (const auto& f : *fs) {
    if (mn.is_null(f)) continue;
    for (const auto& g : *gs)
      if (mm.is_null(g * f - iM) && nn.is_null(f * g - iN)) return true;
  }
  return false;
}

std::string AcyclicityReport::to_string() const {
  auto list = [](const std::vector<int>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k];
    os << "]";
    return os.str();
  };
  return "exact failures " + list(exact_failures) + ", Hom(-, A) failures " + list(hom_failures) + ", forced " +
         list(forced_failures);
}

AcyclicityReport total_acyclicity_probe(const ChainComplex& X, std::optional<int> injdim) {
  AcyclicityReport r;
  if (X.terms.size() < 3) return r;
  for (int d = X.lo + 1; d < X.hi(); ++d)
    if (!exact_at(X, d)) r.exact_failures.push_back(d);
  const AlgebraPtr& A = X.terms.front().algebra;
  ChainComplex H = hom_complex(X, regular_module(A));
  for (int j = X.lo + 1; j < X.hi(); ++j) {
    if (exact_at(H, -j)) continue;
    r.hom_failures.push_back(j);
    if (!injdim || j + *injdim + 1 > X.hi()) continue;
    bool exact_run = true;
    for (int k = j; k <= j + *injdim; ++k)
      exact_run = exact_run && std::find(r.exact_failures.begin(), r.exact_failures.end(), k) == r.exact_failures.end();
    if (exact_run) r.forced_failures.push_back(j);
  }
  return r;
}

ChainComplex resolution_window(const Module& M, int L, bool zero_cap) {
  ChainComplex X = projective_resolution(M, static_cast<std::size_t>(L)).complex();
  if (zero_cap) {
    X.terms.push_back(zero_module(M.algebra));
    X.diffs.push_back(Matrix(M.base, 0, X.at(0).gens));
  }
  return X;
}

}  // namespace gorlab
