#include "gorlab/gorenstein.hpp"

#include <map>
#include <sstream>

namespace gorlab {

DualizingBimodule dualizing_bimodule(const AlgebraPtr& A) {
  const std::size_t n = A->rank();
  std::vector<Matrix> L, R;
  for (std::size_t i = 0; i < n; ++i) {
    L.push_back(A->right_mult(i).transpose());
    R.push_back(A->left_mult(i).transpose());
  }
  Bimodule B = make_bimodule(A, A, n, Matrix(A->base(), n, 0), L, R);
  if (auto p = check_module(B.module); !p.empty()) throw std::logic_error("dualizing_bimodule: " + p.front());
  DualizingBimodule D{B, Matrix::identity(A->base(), n), false};
  Module dl = dual_over_base(D.left()).dual, dr = dual_over_base(D.right()).dual;
  bool ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    ok = ok && dl.action[i] == A->right_mult(i);
    ok = ok && dr.action[i] == A->left_mult(i);
  }
  D.biduality_verified = ok;
  return D;
}

namespace {

std::string verdict_pair(const FinitenessVerdict& l, const FinitenessVerdict& r) {
  return "left: " + l.to_string() + "; right: " + r.to_string();
}

}  // namespace

OmegaHat omega_hat(const AlgebraPtr& A, int depth) {
  DualizingBimodule D = dualizing_bimodule(A);
  auto [l, r] = is_perfect_both_sides(D.bimodule, depth);
  if (l.kind != Finiteness::Finite || r.kind != Finiteness::Finite)
    throw PerfectionError("omega_hat: omega not certified perfect on both sides (" + verdict_pair(l, r) + ")", l, r);
  OmegaHat H;
  H.algebra = A;
  H.left = l;
  H.right = r;
  H.length = std::max(l.value, r.value);
  const AlgebraPtr& env = D.bimodule.env;
  const Module& W = D.bimodule.module;
  const int len = H.length;
  ChainComplex& X = H.complex;
  X.lo = -len;
  if (len == 0) {
    X.terms.push_back(W);
    H.augmentation = Matrix::identity(A->base(), W.gens);
  } else {
    Resolution res = projective_resolution(W, static_cast<std::size_t>(len - 1));
    const std::size_t L = static_cast<std::size_t>(len);
    Module top = res.syzygies.size() > L ? res.syzygies[L] : zero_module(env);
    X.terms.push_back(top);
    for (std::size_t j = L; j-- > 0;) X.terms.push_back(j < res.terms.size() ? res.terms[j] : zero_module(env));
    X.diffs.push_back(res.inclusions.size() >= L ? res.inclusions[L - 1] : Matrix(A->base(), X.terms[1].gens, top.gens));
    for (std::size_t j = L - 1; j-- > 0;) X.diffs.push_back(res.diffs[j]);
    H.augmentation = res.augmentation;
  }
  for (const auto& T : X.terms) H.terms.push_back(bimodule_from_env(A, A, env, T));
  // Certify the construction.
  for (const auto& B : H.terms) {
    auto [pl, pr] = is_perfect_both_sides(B, depth);
    if (pl.kind != Finiteness::Finite || pl.value != 0 || pr.kind != Finiteness::Finite || pr.value != 0)
      throw std::logic_error("omega_hat: a term is not projective on both sides");
  }
  if (!check_complex(X).empty()) throw std::logic_error("omega_hat: not a complex");
  for (int d = X.lo; d < 0; ++d)
    if (!exact_at(X, d)) throw std::logic_error("omega_hat: homology outside degree 0");
  if (!induces_iso_from(X, 0, W, H.augmentation)) throw std::logic_error("omega_hat: augmentation is not a quasi-isomorphism");
  return H;
}

std::string to_string(GorensteinStatus s) {
  switch (s) {
    case GorensteinStatus::Gorenstein: return "Gorenstein";
    case GorensteinStatus::NotGorenstein: return "NotGorenstein";
    case GorensteinStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

// Largest i <= bound with Ext^i(S, A) != 0 over the simples S, or -1.
int top_ext_into_regular(const AlgebraPtr& A, int bound, std::string& detail) {
  int top = -1;
  Module reg = regular_module(A);
  int idx = 0;
  for (const auto& S : simple_modules(A)) {
    GradedGroups g = ext(S, reg, bound);
    detail += "S" + std::to_string(idx++) + ": " + g.to_string() + " ";
    for (const auto& [d, inv] : g.groups)
      if (!inv.is_zero()) top = std::max(top, d);
  }
  return top;
}

struct FieldCheck {
  GorensteinStatus status = GorensteinStatus::Inconclusive;
  int left = 0, right = 0;
  std::optional<FinitenessVerdict> failing;
  std::vector<CriterionReport> evidence;
};

FieldCheck field_check(const AlgebraPtr& A, int depth, const std::string& tag) {
  FieldCheck out;
  DualizingBimodule D = dualizing_bimodule(A);
  auto [l, r] = is_perfect_both_sides(D.bimodule, depth);
  CriterionReport c2{tag + "omega perfect on both sides", "", verdict_pair(l, r)};
  if (l.kind == Finiteness::InfiniteCertified || r.kind == Finiteness::InfiniteCertified) {
    c2.outcome = "fails (certified)";
    out.evidence.push_back(c2);
    out.status = GorensteinStatus::NotGorenstein;
    out.failing = l.kind == Finiteness::InfiniteCertified ? l : r;
    return out;
  }
  if (l.kind != Finiteness::Finite || r.kind != Finiteness::Finite) {
    c2.outcome = "undecided within depth";
    out.evidence.push_back(c2);
    return out;
  }
  c2.outcome = "holds";
  out.evidence.push_back(c2);
  const int bound = std::max(l.value, r.value) + 1;
  std::string dl, dr;
  const int inj_left = top_ext_into_regular(A, bound, dl);
  const int inj_right = top_ext_into_regular(opposite(A), bound, dr);
  CriterionReport c3{tag + "injective dimension from Ext^i(S, A) over simples", "",
                     "left simples " + dl + "| right simples " + dr};
  // id(_A A) = pd(omega_A) and id(A_A) = pd(_A omega).
  if (inj_left == r.value && inj_right == l.value && inj_left < bound && inj_right < bound) {
    c3.outcome = "agrees: left " + std::to_string(inj_left) + ", right " + std::to_string(inj_right);
    out.status = GorensteinStatus::Gorenstein;
    out.left = inj_left;
    out.right = inj_right;
  } else {
    c3.outcome = "disagrees with criterion (2)";
  }
  out.evidence.push_back(c3);
  return out;
}

}  // namespace

GorensteinVerdict gorenstein_check(const AlgebraPtr& A, int depth) {
  GorensteinVerdict v;
  v.depth = depth;
  const BaseRing& R = A->base();
  if (R.is_field()) {
    FieldCheck f = field_check(A, depth, "");
    v.status = f.status;
    v.failing = f.failing;
    v.evidence = f.evidence;
    if (f.status == GorensteinStatus::Gorenstein) v.dimensions.push_back({{R, 0}, f.left, f.right});
    return v;
  }
  // Integers: criterion (2) globally, then per-site checks on A/pA.
  DualizingBimodule D = dualizing_bimodule(A);
  auto [l, r] = is_perfect_both_sides(D.bimodule, depth);
  CriterionReport c2{"omega perfect on both sides", "", verdict_pair(l, r)};
  if (l.kind == Finiteness::InfiniteCertified || r.kind == Finiteness::InfiniteCertified) {
    c2.outcome = "fails (certified)";
    v.evidence.push_back(c2);
    v.status = GorensteinStatus::NotGorenstein;
    v.failing = l.kind == Finiteness::InfiniteCertified ? l : r;
    return v;
  }
  if (l.kind != Finiteness::Finite || r.kind != Finiteness::Finite) {
    c2.outcome = "undecided within depth";
    v.evidence.push_back(c2);
    return v;
  }
  c2.outcome = "holds";
  v.evidence.push_back(c2);
  SiteCandidates sites = prime_sites(A);
  bool all_ok = true;
  for (const auto& site : sites.sites) {
    const std::string tag = "site " + site.to_string() + ": ";
    FieldCheck f = field_check(reduce_mod(A, site.prime), depth, tag);
    for (auto& e : f.evidence) v.evidence.push_back(e);
    if (f.status == GorensteinStatus::NotGorenstein) {
      v.status = GorensteinStatus::NotGorenstein;
      v.failing = f.failing;
      return v;
    }
    if (f.status != GorensteinStatus::Gorenstein) {
      all_ok = false;
      continue;
    }
    // p is a nonzerodivisor on A, so the local injective dimension goes up by one.
    Module Ap = regular_module(A);
    Ap.free_rank.reset();
    Ap.relations = Matrix::identity(R, A->rank()).scaled(Scalar(site.prime));
    GradedGroups e = ext(Ap, regular_module(A), 2);
    const bool spot = e.at(0)->is_zero() && !e.at(1)->is_zero() && e.at(2)->is_zero();
    v.evidence.push_back({tag + "Ext^i_A(A/pA, A), i = 0..2", spot ? "concentrated in degree 1" : "unexpected",
                          e.to_string()});
    if (!spot) all_ok = false;
    SiteDimension sd{site, f.left + 1, f.right + 1};
    if (A->injdim_bound && (sd.left > *A->injdim_bound || sd.right > *A->injdim_bound)) {
      v.evidence.push_back({tag + "declared injective-dimension bound", "exceeded", std::to_string(*A->injdim_bound)});
      all_ok = false;
    }
    v.dimensions.push_back(sd);
  }
  if (A->injdim_bound) v.evidence.push_back({"declared injective-dimension bound", "recorded", std::to_string(*A->injdim_bound)});
  v.status = all_ok ? GorensteinStatus::Gorenstein : GorensteinStatus::Inconclusive;
  return v;
}

namespace {

Module nakayama_with(const DualizingBimodule& D, const Module& M, const HomSpace& H) {
  const std::size_t n = M.algebra->rank();
  std::vector<Matrix> Rw;
  for (std::size_t i = 0; i < n; ++i) Rw.push_back(D.bimodule.right_action(i));
  return H.as_module(M.algebra, [&](std::size_t i, const Matrix& X) { return X * Rw[i]; });
}

}  // namespace

Module nakayama(const Module& M) {
  DualizingBimodule D = dualizing_bimodule(M.algebra);
  HomSpace H(D.left(), M);
  return nakayama_with(D, M, H);
}

Module conakayama(const Module& M) {
  DualizingBimodule D = dualizing_bimodule(M.algebra);
  return tensor_bimodule(D.bimodule, M).module;
}

AdjunctionCheck check_adjunction(const Module& M, const Module& N) {
  const BaseRing& R = M.base;
  DualizingBimodule D = dualizing_bimodule(M.algebra);
  Module W = D.left();
  TensorProduct T = tensor_bimodule(D.bimodule, M);
  HomSpace H1(T.module, N);
  HomSpace HN(W, N);
  Module NakN = nakayama_with(D, N, HN);
  HomSpace H2(M, NakN);
  AdjunctionCheck out;
  out.lhs = H1.invariants();
  out.rhs = H2.invariants();
  const std::size_t gM = M.gens, gW = W.gens;
  Matrix Phi(R, H2.size(), H1.size());
  for (std::size_t k = 0; k < H1.size(); ++k) {
    Matrix f = H1.basis()[k] * T.to_new;  // N.gens x (gW * gM) pair coordinates
    Matrix img(R, NakN.gens, gM);
    for (std::size_t t = 0; t < gM; ++t) {
      Matrix psi(R, N.gens, gW);
      for (std::size_t s = 0; s < gW; ++s) psi.set_block(0, s, f.col(s * gM + t));
      auto c = HN.coordinates(psi);
      if (!c) throw std::logic_error("check_adjunction: partial map is not A-linear");
      img.set_block(0, t, *c);
    }
    auto c2 = H2.coordinates(img);
    if (!c2) throw std::logic_error("check_adjunction: adjoint map is not A-linear");
    Phi.set_block(0, k, *c2);
  }
  Module S = H1.as_r_module(), Tm = H2.as_r_module();
  out.natural_map_bijective = is_injective_map(S, Tm, Phi) && is_surjective_map(Tm, Phi);
  return out;
}

bool TiltingReport::pass() const {
  if (!counit_iso || !unit_iso) return false;
  for (const auto& [d, g] : counit_homology)
    if (d != 0 && !g.is_zero()) return false;
  for (const auto& [d, g] : unit_homology)
    if (d != 0 && !g.is_zero()) return false;
  return true;
}

namespace {

Module plain(const Module& M) {
  Module P = plain_module(M.base, M.gens, M.relations);
  return P;
}

// Assemble a total complex from blocks: blocks[n] lists (key, module) in order; maps gives components.
struct Block {
  int key;
  Module module;
};

}  // namespace

TiltingReport verify_tilting(const AlgebraPtr& A, const Module& M, int lo, int hi, int depth) {
  const BaseRing& R = A->base();
  OmegaHat OH = omega_hat(A, depth);
  const int len = OH.length;
  TiltingReport rep;
  rep.omega_hat_length = len;
  auto P = [&](int p) -> const Bimodule& { return OH.terms[static_cast<std::size_t>(p + len)]; };
  auto dP = [&](int p) -> const Matrix& { return OH.complex.d(p); };  // P^p -> P^{p+1}
  const std::size_t n = A->rank();

  // Counit: P (x)_A Hom_A(P, M) -> M.
  {
    std::vector<HomSpace> Hq;
    std::vector<Module> Dq;
    for (int q = 0; q <= len; ++q) {
      const Bimodule& B = P(-q);
      Hq.emplace_back(B.as_left(), M);
      std::vector<Matrix> Rb;
      for (std::size_t i = 0; i < n; ++i) Rb.push_back(B.right_action(i));
      Dq.push_back(Hq.back().as_module(A, [&](std::size_t i, const Matrix& X) { return X * Rb[i]; }));
    }
    std::vector<Matrix> delta;  // delta[q]: D^q -> D^{q+1}
    for (int q = 0; q < len; ++q) {
      const HomSpace& from = Hq[static_cast<std::size_t>(q)];
      const HomSpace& to = Hq[static_cast<std::size_t>(q + 1)];
      Matrix m(R, to.size(), from.size());
      for (std::size_t k = 0; k < from.size(); ++k) {
        auto c = to.coordinates(from.basis()[k] * dP(-q - 1));
        if (!c) throw std::logic_error("verify_tilting: Hom differential");
        m.set_block(0, k, (q % 2 == 0) ? *c : -*c);
      }
      delta.push_back(m);
    }
    std::map<std::pair<int, int>, TensorProduct> T;
    for (int p = -len; p <= 0; ++p)
      for (int q = 0; q <= len; ++q) T.emplace(std::make_pair(p, q), tensor_over(P(p).as_right(), Dq[static_cast<std::size_t>(q)]));
    ChainComplex tot;
    tot.lo = -len;
    std::vector<std::vector<int>> keys;  // p values per total degree
    std::vector<std::vector<std::size_t>> offs;
    for (int d = -len; d <= len; ++d) {
      std::vector<Module> parts;
      std::vector<int> ks;
      std::vector<std::size_t> os;
      std::size_t off = 0;
      for (int p = -len; p <= 0; ++p) {
        int q = d - p;
        if (q < 0 || q > len) continue;
        const Module& m = T.at({p, q}).module;
        parts.push_back(plain(m));
        ks.push_back(p);
        os.push_back(off);
        off += m.gens;
      }
      tot.terms.push_back(parts.empty() ? plain_module(R, 0, Matrix(R, 0, 0)) : direct_sum(parts).module);
      keys.push_back(ks);
      offs.push_back(os);
    }
    for (int d = -len; d < len; ++d) {
      const std::size_t di = static_cast<std::size_t>(d + len);
      Matrix m(R, tot.terms[di + 1].gens, tot.terms[di].gens);
      for (std::size_t a = 0; a < keys[di].size(); ++a) {
        const int p = keys[di][a], q = d - p;
        const TensorProduct& src = T.at({p, q});
        const std::size_t gP = P(p).module.gens, gD = Dq[static_cast<std::size_t>(q)].gens;
        for (std::size_t b = 0; b < keys[di + 1].size(); ++b) {
          const int p2 = keys[di + 1][b], q2 = d + 1 - p2;
          const TensorProduct& dst = T.at({p2, q2});
          Matrix blk;
          if (p2 == p + 1 && q2 == q)
            blk = dst.to_new * kron(dP(p), Matrix::identity(R, gD)) * src.to_old;
          else if (p2 == p && q2 == q + 1)
            blk = (dst.to_new * kron(Matrix::identity(R, gP), delta[static_cast<std::size_t>(q)]) * src.to_old)
                      .scaled(Scalar((p % 2 == 0) ? 1 : -1));
          else
            continue;
          m.set_block(offs[di + 1][b], offs[di][a], blk);
        }
      }
      tot.diffs.push_back(m);
    }
    // Evaluation on total degree 0.
    const std::size_t d0 = static_cast<std::size_t>(len);
    Matrix ev(R, M.gens, tot.terms[d0].gens);
    for (std::size_t a = 0; a < keys[d0].size(); ++a) {
      const int p = keys[d0][a];
      const HomSpace& H = Hq[static_cast<std::size_t>(-p)];
      const TensorProduct& src = T.at({p, -p});
      const std::size_t gP = P(p).module.gens, gD = H.size();
      Matrix pairs(R, M.gens, gP * gD);
      for (std::size_t s = 0; s < gP; ++s)
        for (std::size_t k = 0; k < gD; ++k) pairs.set_block(0, s * gD + k, H.basis()[k].col(s));
      ev.set_block(0, offs[d0][a], pairs * src.to_old);
    }
    if (!check_complex(tot).empty()) throw std::logic_error("verify_tilting: counit total complex is not a complex");
    for (int d = lo; d <= hi; ++d) rep.counit_homology.push_back({d, homology(tot, d)});
    rep.counit_iso = induces_iso_from(tot, 0, M, ev);
  }

  // Unit: M -> Hom_A(P, P (x)_A M).
  {
    std::vector<TensorProduct> TY;
    for (int b = -len; b <= 0; ++b) TY.push_back(tensor_bimodule(P(b), M));
    auto Y = [&](int b) -> const TensorProduct& { return TY[static_cast<std::size_t>(b + len)]; };
    auto dY = [&](int b) { return Y(b + 1).to_new * kron(dP(b), Matrix::identity(R, M.gens)) * Y(b).to_old; };
    std::map<std::pair<int, int>, HomSpace> E;
    for (int a = -len; a <= 0; ++a)
      for (int b = -len; b <= 0; ++b) E.emplace(std::make_pair(a, b), HomSpace(P(a).as_left(), Y(b).module));
    ChainComplex tot;
    tot.lo = -len;
    std::vector<std::vector<int>> keys;
    std::vector<std::vector<std::size_t>> offs;
    for (int d = -len; d <= len; ++d) {
      std::vector<Module> parts;
      std::vector<int> ks;
      std::vector<std::size_t> os;
      std::size_t off = 0;
      for (int a = -len; a <= 0; ++a) {
        int b = a + d;
        if (b < -len || b > 0) continue;
        const HomSpace& H = E.at({a, b});
        parts.push_back(H.as_r_module());
        ks.push_back(a);
        os.push_back(off);
        off += H.size();
      }
      tot.terms.push_back(parts.empty() ? plain_module(R, 0, Matrix(R, 0, 0)) : direct_sum(parts).module);
      keys.push_back(ks);
      offs.push_back(os);
    }
    for (int d = -len; d < len; ++d) {
      const std::size_t di = static_cast<std::size_t>(d + len);
      Matrix m(R, tot.terms[di + 1].gens, tot.terms[di].gens);
      for (std::size_t x = 0; x < keys[di].size(); ++x) {
        const int a = keys[di][x], b = a + d;
        const HomSpace& src = E.at({a, b});
        for (std::size_t y = 0; y < keys[di + 1].size(); ++y) {
          const int a2 = keys[di + 1][y], b2 = a2 + d + 1;
          const HomSpace& dst = E.at({a2, b2});
          Matrix blk(R, dst.size(), src.size());
          bool used = false;
          for (std::size_t k = 0; k < src.size(); ++k) {
            Matrix img;
            if (a2 == a && b2 == b + 1)
              img = dY(b) * src.basis()[k];
            else if (a2 == a - 1 && b2 == b)
              img = (src.basis()[k] * dP(a - 1)).scaled(Scalar((d % 2 == 0) ? -1 : 1));
            else
              break;
            used = true;
            auto c = dst.coordinates(img);
            if (!c) throw std::logic_error("verify_tilting: unit differential");
            blk.set_block(0, k, *c);
          }
          if (used) m.set_block(offs[di + 1][y], offs[di][x], blk);
        }
      }
      tot.diffs.push_back(m);
    }
    const std::size_t d0 = static_cast<std::size_t>(len);
    Matrix eta(R, tot.terms[d0].gens, M.gens);
    for (std::size_t x = 0; x < keys[d0].size(); ++x) {
      const int a = keys[d0][x];
      const HomSpace& H = E.at({a, a});
      const std::size_t gP = P(a).module.gens;
      for (std::size_t t = 0; t < M.gens; ++t) {
        Matrix phi(R, Y(a).module.gens, gP);
        for (std::size_t s = 0; s < gP; ++s) phi.set_block(0, s, Y(a).to_new.col(s * M.gens + t));
        auto c = H.coordinates(phi);
        if (!c) throw std::logic_error("verify_tilting: unit is not A-linear");
        eta.set_block(offs[d0][x], t, *c);
      }
    }
    if (!check_complex(tot).empty()) throw std::logic_error("verify_tilting: unit total complex is not a complex");
    for (int d = lo; d <= hi; ++d) rep.unit_homology.push_back({d, homology(tot, d)});
    rep.unit_iso = induces_iso_into(M, tot, 0, eta);
  }
  return rep;
}

}  // namespace gorlab
