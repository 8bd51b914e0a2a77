#include "gorlab/homological.hpp"

#include <sstream>
#include <stdexcept>

namespace gorlab {

namespace {

bool is_map(const Module& M, const Module& N, const Matrix& f) {
  if (M.algebra) return is_module_map(M, N, f);
  if (f.rows() != N.gens || f.cols() != M.gens) return false;
  return !M.has_relations() || in_relation_span(N, f * M.relations);
}

Matrix zero_map(const BaseRing& R, std::size_t rows, std::size_t cols) { return Matrix(R, rows, cols); }

// Coordinates in H of f composed with g, for each basis map f of `from`.
Matrix precompose_matrix(const HomSpace& from, const HomSpace& to, const Matrix& g) {
  const BaseRing& R = from.source().base;
  Matrix out(R, to.size(), from.size());
  for (std::size_t k = 0; k < from.size(); ++k) {
    auto c = to.coordinates(from.basis()[k] * g);
    if (!c) throw std::logic_error("precompose: composite is not a module map");
    out.set_block(0, k, *c);
  }
  return out;
}

}  // namespace

std::vector<std::string> check_complex(const ChainComplex& X) {
  std::vector<std::string> out;
  if (X.diffs.size() + 1 != X.terms.size() && !X.terms.empty()) out.push_back("differential count does not match terms");
  for (std::size_t k = 0; k < X.diffs.size(); ++k) {
    const int deg = X.lo + static_cast<int>(k);
    if (!is_map(X.terms[k], X.terms[k + 1], X.diffs[k])) out.push_back("d^" + std::to_string(deg) + " is not a module map");
    if (k + 1 < X.diffs.size()) {
      Matrix dd = X.diffs[k + 1] * X.diffs[k];
      if (!maps_equal(X.terms[k + 2], dd, zero_map(dd.base(), dd.rows(), dd.cols())))
        out.push_back("d o d != 0 at degree " + std::to_string(deg));
    }
  }
  return out;
}

RInvariants homology(const ChainComplex& X, int d) {
  if (X.empty() || !X.in_window(d)) return zero_invariants(X.empty() ? BaseRing() : X.terms[0].base);
  const Module& Xd = X.at(d);
  const BaseRing& R = Xd.base;
  Matrix incl;
  Module K;
  if (d < X.hi()) {
    Submodule s = kernel_of(Xd, X.at(d + 1), X.d(d));
    K = s.module;
    incl = s.inclusion;
  } else {
    Tidy t = tidy(Xd);
    K = t.module;
    incl = t.to_old;
  }
  if (K.gens == 0) return zero_invariants(R);
  Matrix rel = K.relations.rows() == K.gens ? K.relations : Matrix(R, K.gens, 0);
  if (d > X.lo) {
    const Matrix& g = X.d(d - 1);
    Matrix sys = Xd.has_relations() ? hcat(incl, Xd.relations) : incl;
    auto c = LinearSolver(sys).solve(g);
    if (!c) throw std::logic_error("homology: image not inside kernel (d o d != 0?)");
    rel = hcat(rel, c->rows_range(0, K.gens));
  }
  return cokernel_invariants(rel);
}

bool exact_at(const ChainComplex& X, int d) { return homology(X, d).is_zero(); }

ChainComplex hom_complex(const ChainComplex& X, const Module& N) {
  ChainComplex out;
  if (X.empty()) return out;
  out.lo = -X.hi();
  std::vector<HomSpace> spaces;
  for (int d = X.hi(); d >= X.lo; --d) spaces.emplace_back(X.at(d), N);
  for (const auto& H : spaces) out.terms.push_back(H.as_r_module());
  for (std::size_t k = 0; k + 1 < spaces.size(); ++k) {
    const int d = X.hi() - static_cast<int>(k);  // Hom(X^d) -> Hom(X^{d-1})
    out.diffs.push_back(precompose_matrix(spaces[k], spaces[k + 1], X.d(d - 1)));
  }
  return out;
}

ProjectiveCover projective_cover(const Module& M, const IdempotentDecomposition* idem) {
  const BaseRing& R = M.base;
  const AlgebraPtr& A = M.algebra;
  if (!A) throw std::invalid_argument("projective_cover: module needs an algebra");
  const std::size_t n = A->rank();
  if (M.free_rank && !M.has_relations()) return {M, Matrix::identity(R, M.gens), true, true};
  Tidy t = tidy(M);
  const Module& Mt = t.module;
  if (Mt.gens == 0) return {zero_module(A), Matrix(R, M.gens, 0), true, true};

  auto aspan = [&](const Matrix& v) {
    std::vector<Matrix> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(Mt.action[i] * v);
    return hcat(cols, R, Mt.gens);
  };

  if (R.is_field()) {
    std::optional<IdempotentDecomposition> own;
    if (!idem) {
      own = primitive_idempotents(*A);
      idem = &*own;
    }
    const Matrix& J = idem->radical;
    if (J.cols() == 0) return {Mt, t.to_old, true, false};
    std::vector<Matrix> jm;
    for (std::size_t c = 0; c < J.cols(); ++c) jm.push_back(Mt.act(J.col(c)));
    Matrix S = image_basis(hcat(jm, R, Mt.gens));
    const std::size_t top_M = Mt.gens - S.cols();
    std::vector<Module> parts;
    std::vector<Matrix> maps;
    std::size_t top_P = 0;
    for (const auto& e : idem->idempotents) {
      Matrix Ae = A->right_mult_by(e);  // columns e_i e
      std::vector<Matrix> je;
      for (std::size_t c = 0; c < J.cols(); ++c) je.push_back(A->left_mult_by(J.col(c)) * Ae);
      const std::size_t top_e = rank(Ae) - rank(hcat(je, R, n));
      Matrix Le = Mt.act(e);
      for (std::size_t c = 0; c < Le.cols() && S.cols() < Mt.gens; ++c) {
        Matrix v = Le.col(c);
        if (v.is_zero() || LinearSolver(S).contains(v)) continue;
        S = image_basis(hcat(S, aspan(v)));
        Submodule P = r_submodule(regular_module(A), Ae);
        parts.push_back(P.module);
        maps.push_back(aspan(v) * P.inclusion);
        top_P += top_e;
      }
    }
    if (S.cols() < Mt.gens) throw std::logic_error("projective_cover: idempotents failed to generate");
    DirectSum ds = direct_sum(parts);
    Matrix f = t.to_old * hcat(maps, R, Mt.gens);
    return {ds.module, f, top_P == top_M, false};
  }

  // Free cover over Z.
  const Matrix rel = Mt.has_relations() ? Mt.relations : Matrix(R, Mt.gens, 0);
  const Matrix I = Matrix::identity(R, Mt.gens);
  auto generates = [&](const std::vector<Matrix>& vs) {
    std::vector<Matrix> cols{rel};
    for (const auto& v : vs) cols.push_back(aspan(v));
    return LinearSolver(hcat(cols, R, Mt.gens)).contains(I);
  };
  std::vector<Matrix> chosen;
  std::vector<Matrix> singles;
  for (std::size_t g = 0; g < Mt.gens; ++g) singles.push_back(I.col(g));
  {
    Matrix all(R, Mt.gens, 1);
    for (std::size_t g = 0; g < Mt.gens; ++g) all(g, 0) = 1;
    singles.push_back(all);
    if (Mt.gens <= 12)
      for (std::size_t a = 0; a < Mt.gens; ++a)
        for (std::size_t b = a + 1; b < Mt.gens; ++b) {
          singles.push_back(I.col(a) + I.col(b));
          singles.push_back(I.col(a) - I.col(b));
        }
  }
  for (const auto& v : singles)
    if (generates({v})) {
      chosen = {v};
      break;
    }
  if (chosen.empty()) {
    for (std::size_t g = 0; g < Mt.gens; ++g) {
      std::vector<Matrix> cols{rel};
      for (const auto& v : chosen) cols.push_back(aspan(v));
      if (!LinearSolver(hcat(cols, R, Mt.gens)).contains(I.col(g))) chosen.push_back(I.col(g));
    }
    for (std::size_t k = chosen.size(); k-- > 0;) {
      auto trial = chosen;
      trial.erase(trial.begin() + static_cast<long>(k));
      if (!trial.empty() && generates(trial)) chosen = trial;
    }
  }
  std::vector<Matrix> maps;
  for (const auto& v : chosen) maps.push_back(aspan(v));
  Matrix f = t.to_old * hcat(maps, R, Mt.gens);
  return {free_module(A, chosen.size()), f, false, true};
}

void Resolution::extend() {
  if (terminated) return;
  const std::size_t i = terms.size();
  const Module& Om = syzygies[i];
  ProjectiveCover c = projective_cover(Om, idem.get());
  minimal = minimal && c.minimal;
  terms.push_back(c.projective);
  covers.push_back(c.map);
  if (i == 0)
    augmentation = c.map;
  else
    diffs.push_back(inclusions[i - 1] * c.map);
  Submodule K = kernel_of(c.projective, Om, c.map);
  syzygies.push_back(K.module);
  inclusions.push_back(K.inclusion);
  if (K.module.gens == 0) terminated = true;
}

namespace {

Resolution start_resolution(const Module& M) {
  Resolution res;
  res.module = M;
  res.syzygies.push_back(M);
  if (M.base.is_field()) res.idem = std::make_shared<const IdempotentDecomposition>(primitive_idempotents(*M.algebra));
  res.extend();
  return res;
}

}  // namespace

Resolution projective_resolution(const Module& M, std::size_t length) {
  Resolution res = start_resolution(M);
  while (res.terms.size() < length + 1 && !res.terminated) res.extend();
  return res;
}

ChainComplex Resolution::complex() const {
  ChainComplex X;
  const int len = static_cast<int>(terms.size()) - 1;
  X.lo = -len;
  for (int k = 0; k <= len; ++k) X.terms.push_back(terms[static_cast<std::size_t>(len - k)]);
  for (int k = 0; k < len; ++k) X.diffs.push_back(diffs[static_cast<std::size_t>(len - k - 1)]);
  return X;
}

Module syzygy(const Module& M, std::size_t i) {
  if (i == 0) return M;
  Resolution res = projective_resolution(M, i - 1);
  if (res.syzygies.size() <= i) return zero_module(M.algebra);
  return res.syzygies[i];
}

const RInvariants* GradedGroups::at(int d) const {
  for (const auto& [deg, g] : groups)
    if (deg == d) return &g;
  return nullptr;
}

std::string GradedGroups::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < groups.size(); ++k) os << (k ? ", " : "") << groups[k].first << ": " << groups[k].second.to_string();
  os << "}";
  return os.str();
}

namespace {

// Make sure res has P_0..P_k (or has terminated).
void ensure_terms(Resolution& res, std::size_t k) {
  while (res.terms.size() < k + 1 && !res.terminated) res.extend();
}

}  // namespace

GradedGroups ext_from(const Resolution& res_in, const Module& N, int from, int to) {
  Resolution res = res_in;
  GradedGroups out;
  out.base = N.base;
  if (to < from) return out;
  const int lo = std::max(0, from - 1);
  ensure_terms(res, static_cast<std::size_t>(to + 1));
  const int top = std::min(to + 1, static_cast<int>(res.terms.size()) - 1);
  ChainComplex C;
  C.lo = lo;
  std::vector<HomSpace> spaces;
  for (int i = lo; i <= top; ++i) spaces.emplace_back(res.terms[static_cast<std::size_t>(i)], N);
  for (const auto& H : spaces) C.terms.push_back(H.as_r_module());
  for (int i = lo; i < top; ++i)
    C.diffs.push_back(precompose_matrix(spaces[static_cast<std::size_t>(i - lo)], spaces[static_cast<std::size_t>(i - lo + 1)],
                                        res.diffs[static_cast<std::size_t>(i)]));
  for (int i = std::max(0, from); i <= to; ++i) out.groups.push_back({i, homology(C, i)});
  return out;
}

GradedGroups ext(const Module& M, const Module& N, int n) {
  if (!same_algebra(M.algebra, N.algebra)) throw std::invalid_argument("ext: algebra mismatch");
  return ext_from(projective_resolution(M, static_cast<std::size_t>(n + 1)), N, 0, n);
}

GradedGroups tor_from(const Module& L, const Resolution& res_in, int from, int to) {
  Resolution res = res_in;
  GradedGroups out;
  out.base = L.base;
  if (to < from) return out;
  ensure_terms(res, static_cast<std::size_t>(to + 1));
  const int low = std::max(0, from - 1);
  const int top = std::min(to + 1, static_cast<int>(res.terms.size()) - 1);
  std::vector<TensorProduct> T;
  for (int i = low; i <= top; ++i) T.push_back(tensor_over(L, res.terms[static_cast<std::size_t>(i)]));
  // Cochain complex in degrees -top..-low.
  ChainComplex C;
  C.lo = -top;
  for (int i = top; i >= low; --i) C.terms.push_back(T[static_cast<std::size_t>(i - low)].module);
  const Matrix IL = Matrix::identity(L.base, L.gens);
  for (int i = top; i > low; --i) {
    const auto& src = T[static_cast<std::size_t>(i - low)];
    const auto& dst = T[static_cast<std::size_t>(i - 1 - low)];
    C.diffs.push_back(dst.to_new * kron(IL, res.diffs[static_cast<std::size_t>(i - 1)]) * src.to_old);
  }
  for (int i = std::max(0, from); i <= to; ++i) out.groups.push_back({i, homology(C, -i)});
  return out;
}

GradedGroups tor(const Module& L, const Module& M, int n) {
  return tor_from(L, projective_resolution(M, static_cast<std::size_t>(n + 1)), 0, n);
}

std::string to_string(Finiteness f) {
  switch (f) {
    case Finiteness::Finite: return "Finite";
    case Finiteness::AtLeast: return "AtLeast";
    case Finiteness::InfiniteCertified: return "InfiniteCertified";
  }
  return "?";
}

std::string FinitenessVerdict::to_string() const {
  std::ostringstream os;
  os << gorlab::to_string(kind) << "(" << value << ")";
  if (kind == Finiteness::InfiniteCertified) os << " [Omega^" << b << " ~ (Omega^" << a << ")^" << multiplicity << "]";
  return os.str();
}

std::optional<Matrix> splitting_section(const Resolution& res, std::size_t d) {
  if (d >= res.terms.size()) return std::nullopt;
  const Module& Om = res.syzygies[d];
  const Module& P = res.terms[d];
  const Matrix& pi = res.covers[d];
  const BaseRing& R = Om.base;
  if (Om.gens == 0) return Matrix(R, P.gens, 0);
  HomSpace H(Om, P);
  if (H.size() == 0) return is_zero(Om) ? std::optional<Matrix>(Matrix(R, P.gens, Om.gens)) : std::nullopt;
  std::vector<Matrix> cols;
  for (const auto& b : H.basis()) cols.push_back((pi * b).vec());
  if (Om.has_relations()) cols.push_back(kron(Matrix::identity(R, Om.gens), Om.relations));
  Matrix sys = hcat(cols, R, Om.gens * Om.gens);
  auto c = LinearSolver(sys).solve(Matrix::identity(R, Om.gens).vec());
  if (!c) return std::nullopt;
  Matrix s = H.map_from(c->rows_range(0, H.size()));
  if (!is_module_map(Om, P, s) || !maps_equal(Om, pi * s, Matrix::identity(R, Om.gens)))
    throw std::logic_error("splitting_section: verification failed");
  return s;
}

namespace {

// Ext^1(Omega^a, Omega^{a+1}) as the cokernel of Hom(P_a, Omega^{a+1}) -> End(Omega^{a+1}).
RInvariants split_obstruction(const Resolution& res, std::size_t a) {
  const Module& K = res.syzygies[a + 1];
  const Module& P = res.terms[a];
  const Matrix& incl = res.inclusions[a];
  HomSpace H1(P, K), H2(K, K);
  Matrix img = precompose_matrix(H1, H2, incl);
  Matrix rel = H2.relations().rows() == H2.size() ? H2.relations() : Matrix(K.base, H2.size(), 0);
  return cokernel_invariants(hcat(rel, img));
}

Module power(const Module& X, int m) {
  std::vector<Module> parts(static_cast<std::size_t>(m), X);
  return direct_sum(parts).module;
}

struct RecurrenceHit {
  int m, padY, padX;
};

// Y + A^padY isomorphic to X^m + A^padX for small m and paddings.
// dim J^k M for k = 1, 2, ... (field base).
std::vector<std::size_t> radical_layers(const Module& M, const Matrix& J) {
  Tidy t = tidy(M);
  const BaseRing& R = M.base;
  std::vector<std::size_t> out;
  Matrix V = Matrix::identity(R, t.module.gens);
  while (V.cols() > 0) {
    std::vector<Matrix> parts;
    for (std::size_t r = 0; r < J.cols(); ++r) parts.push_back(t.module.act(J.col(r)) * V);
    Matrix W = image_basis(hcat(parts, R, t.module.gens));
    if (W.cols() == V.cols()) break;
    V = W;
    out.push_back(V.cols());
  }
  return out;
}

std::vector<std::size_t> layer_sum(const std::vector<std::size_t>& a, long ma, const std::vector<std::size_t>& b, long mb) {
  std::vector<std::size_t> out(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += static_cast<std::size_t>(ma) * a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += static_cast<std::size_t>(mb) * b[k];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::optional<RecurrenceHit> stable_multiple(const Module& X, const Module& Y) {
  const RInvariants ix = invariants(X), iy = invariants(Y);
  const bool field = X.base.is_field();
  std::vector<std::size_t> lx, ly, la;
  if (field) {
    Matrix J = radical_basis(*X.algebra);
    lx = radical_layers(X, J);
    ly = radical_layers(Y, J);
    la = radical_layers(regular_module(X.algebra), J);
  }
  if (ix.free_rank == 0 && ix.torsion.empty()) return std::nullopt;
  const long n = static_cast<long>(X.algebra->rank());
  const long dx = static_cast<long>(ix.free_rank), dy = static_cast<long>(iy.free_rank);
  for (int m = 1; m <= 4; ++m) {
    const long diff = m * dx - dy;  // = (padY - padX) * n
    if (diff % n != 0) continue;
    const long padY = diff > 0 ? diff / n : 0, padX = diff < 0 ? -diff / n : 0;
    if (padY > 3 || padX > 3) continue;
    if (dx == 0 && m > 1) break;
    if (field && layer_sum(ly, 1, la, padY) != layer_sum(lx, m, la, padX)) continue;
    Module lhs = padY ? direct_sum(Y, free_module(Y.algebra, static_cast<std::size_t>(padY))) : Y;
    Module rhs = power(X, m);
    if (padX) rhs = direct_sum(rhs, free_module(Y.algebra, static_cast<std::size_t>(padX)));
    lhs.free_rank.reset();
    rhs.free_rank.reset();
    if (invariants(lhs) != invariants(rhs)) continue;
    if (module_iso(lhs, rhs).found()) return RecurrenceHit{m, static_cast<int>(padY), static_cast<int>(padX)};
  }
  return std::nullopt;
}

}  // namespace

namespace {

// Verdict decided at step s (needs P_s and Omega^{s+1}), if any.
std::optional<FinitenessVerdict> verdict_at(const Resolution& res, int s) {
  const std::size_t su = static_cast<std::size_t>(s);
  const bool skip_split = res.minimal && res.syzygies.size() > su + 1 && res.syzygies[su + 1].gens != 0;
  FinitenessVerdict v;
  if (!skip_split && splitting_section(res, su)) {
    v.kind = Finiteness::Finite;
    v.value = s;
    v.certificate = "Omega^" + std::to_string(s) + " is a direct summand of P_" + std::to_string(s) +
                    " (explicit section of the cover verified)";
    return v;
  }
  for (int a = s - 1; a >= 0; --a) {
    auto hit = stable_multiple(res.syzygies[static_cast<std::size_t>(a)], res.syzygies[su]);
    if (!hit) continue;
    RInvariants obs = split_obstruction(res, static_cast<std::size_t>(a));
    if (obs.is_zero()) continue;
    v.kind = Finiteness::InfiniteCertified;
    v.value = a;
    v.a = a;
    v.b = s;
    v.multiplicity = hit->m;
    v.pad_left = hit->padY;
    v.pad_right = hit->padX;
    v.obstruction = obs;
    std::ostringstream os;
    os << "Omega^" << s << " (+A^" << hit->padY << ") ~ (Omega^" << a << ")^" << hit->m << " (+A^" << hit->padX
       << "), Ext^1(Omega^" << a << ", Omega^" << a + 1 << ") = " << obs.to_string();
    v.certificate = os.str();
    return v;
  }
  return std::nullopt;
}

FinitenessVerdict at_least(int depth) {
  FinitenessVerdict v;
  v.kind = Finiteness::AtLeast;
  v.value = depth;
  v.certificate = "no splitting or recurrence within depth " + std::to_string(depth);
  return v;
}

}  // namespace

FinitenessVerdict proj_dim_of(const Resolution& res) {
  const int depth = static_cast<int>(res.terms.size()) - 1;
  for (int s = 0; s <= depth; ++s)
    if (auto v = verdict_at(res, s)) return *v;
  return at_least(depth);
}

FinitenessVerdict proj_dim(const Module& M, int depth) {
  if (depth < 1) throw std::invalid_argument("proj_dim: depth must be >= 1");
  Resolution res = start_resolution(M);
  for (int s = 0; s <= depth; ++s) {
    ensure_terms(res, static_cast<std::size_t>(s));
    if (static_cast<std::size_t>(s) >= res.terms.size()) break;
    if (auto v = verdict_at(res, s)) return *v;
  }
  return at_least(depth);
}

bool reverify(const Module& M, const FinitenessVerdict& v) {
  if (v.kind == Finiteness::AtLeast) return true;
  Resolution res = projective_resolution(M, static_cast<std::size_t>(std::max(v.value, v.b) + 1));
  if (v.kind == Finiteness::Finite) return splitting_section(res, static_cast<std::size_t>(v.value)).has_value();
  if (static_cast<std::size_t>(v.b) >= res.syzygies.size()) return false;
  auto hit = stable_multiple(res.syzygies[static_cast<std::size_t>(v.a)], res.syzygies[static_cast<std::size_t>(v.b)]);
  if (!hit) return false;
  return !split_obstruction(res, static_cast<std::size_t>(v.a)).is_zero();
}

std::pair<FinitenessVerdict, FinitenessVerdict> is_perfect_both_sides(const Bimodule& B, int depth) {
  return {proj_dim(B.as_left(), depth), proj_dim(B.as_right(), depth)};
}

InjectiveResolution injective_resolution_artin(const Module& M, std::size_t length) {
  if (!M.base.is_field()) throw std::invalid_argument("injective_resolution_artin: Artin base required");
  BaseDual DM = dual_over_base(M);
  Resolution res = projective_resolution(DM.dual, length);
  InjectiveResolution out;
  out.module = M;
  out.complex.lo = 0;
  for (const auto& P : res.terms) out.complex.terms.push_back(with_algebra(dual_over_base(P).dual, M.algebra));
  for (const auto& d : res.diffs) out.complex.diffs.push_back(d.transpose());
  out.coaugmentation = res.augmentation.transpose() * DM.biduality;
  return out;
}

}  // namespace gorlab

namespace gorlab {

std::vector<Module> simple_modules(const AlgebraPtr& A) {
  if (!A->base().is_field()) throw std::invalid_argument("simple_modules: field base required");
  IdempotentDecomposition idem = primitive_idempotents(*A);
  const BaseRing& R = A->base();
  const std::size_t n = A->rank();
  Module reg = regular_module(A);
  std::vector<Module> out;
  for (const auto& e : idem.idempotents) {
    Submodule P = r_submodule(reg, A->right_mult_by(e));
    std::vector<Matrix> je;
    for (std::size_t c = 0; c < idem.radical.cols(); ++c) je.push_back(A->left_mult_by(idem.radical.col(c)) * A->right_mult_by(e));
    Module S = P.module;
    if (!je.empty()) {
      auto c = LinearSolver(P.inclusion).solve(hcat(je, R, n));
      if (!c) throw std::logic_error("simple_modules: Je not inside Ae");
      S = quotient(P.module, *c).module;
    }
    bool seen = false;
    for (const auto& T : out)
      if (invariants(T) == invariants(S) && module_iso(T, S).found()) seen = true;
    if (!seen) out.push_back(S);
  }
  return out;
}

namespace {

// Cycles at deg with inclusion, and boundary coordinates inside them.
struct CycleData {
  Module Z;
  Matrix incl;
  Matrix boundaries;  // Z.gens x *
};

CycleData cycles(const ChainComplex& X, int deg) {
  const Module& Xd = X.at(deg);
  const BaseRing& R = Xd.base;
  CycleData c;
  if (deg < X.hi()) {
    Submodule s = kernel_of(Xd, X.at(deg + 1), X.d(deg));
    c.Z = s.module;
    c.incl = s.inclusion;
  } else {
    Tidy t = tidy(Xd);
    c.Z = t.module;
    c.incl = t.to_old;
  }
  c.boundaries = c.Z.relations.rows() == c.Z.gens ? c.Z.relations : Matrix(R, c.Z.gens, 0);
  if (deg > X.lo && c.Z.gens > 0) {
    Matrix sys = Xd.has_relations() ? hcat(c.incl, Xd.relations) : c.incl;
    auto b = LinearSolver(sys).solve(X.d(deg - 1));
    if (!b) throw std::logic_error("cycles: boundaries outside cycles");
    c.boundaries = hcat(c.boundaries, b->rows_range(0, c.Z.gens));
  }
  return c;
}

bool lies_in(const Matrix& span, const Matrix& v) {
  if (v.cols() == 0 || v.is_zero()) return true;
  if (span.cols() == 0) return false;
  return LinearSolver(span).contains(v);
}

}  // namespace

bool induces_iso_from(const ChainComplex& X, int deg, const Module& M, const Matrix& f) {
  const BaseRing& R = M.base;
  CycleData c = cycles(X, deg);
  Matrix g = f * c.incl;  // Z -> M
  // Vanishing on boundaries.
  if (!maps_equal(M, g * c.boundaries, Matrix(R, M.gens, c.boundaries.cols()))) return false;
  // Surjective.
  Matrix img = M.has_relations() ? hcat(g, M.relations) : g;
  if (!lies_in(img, Matrix::identity(R, M.gens))) return false;
  // Kernel inside boundaries.
  Matrix K = M.has_relations() ? kernel(hcat(g, M.relations)).rows_range(0, c.Z.gens) : kernel(g);
  return lies_in(c.boundaries, K);
}

bool induces_iso_into(const Module& M, const ChainComplex& X, int deg, const Matrix& g) {
  const BaseRing& R = M.base;
  const Module& Xd = X.at(deg);
  CycleData c = cycles(X, deg);
  Matrix sys = Xd.has_relations() ? hcat(c.incl, Xd.relations) : c.incl;
  auto lift = c.Z.gens ? LinearSolver(sys).solve(g) : std::optional<Matrix>();
  Matrix h;
  if (c.Z.gens == 0) {
    if (!maps_equal(Xd, g, Matrix(R, Xd.gens, M.gens))) return false;
    h = Matrix(R, 0, M.gens);
  } else {
    if (!lift) return false;
    h = lift->rows_range(0, c.Z.gens);
  }
  // Surjective onto homology.
  if (c.Z.gens > 0 && !lies_in(hcat(h, c.boundaries), Matrix::identity(R, c.Z.gens))) return false;
  // Injective: h(m) in boundaries forces m = 0 in M.
  Matrix sys2 = hcat(h, c.boundaries);
  if (sys2.rows() == 0) return is_zero(M);
  Matrix K = kernel(sys2).rows_range(0, M.gens);
  return M.has_relations() ? lies_in(M.relations, K) : K.is_zero();
}

}  // namespace gorlab
