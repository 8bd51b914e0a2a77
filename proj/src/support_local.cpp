#include "gorlab/support_local.hpp"

#include <stdexcept>

namespace gorlab {

std::string PrimeSite::to_string() const { return is_field_site() ? "(0)" : "(" + std::to_string(prime) + ")"; }

namespace {

std::vector<long> prime_factors(mpz_class v) {
  std::vector<long> out;
  if (v < 0) v = -v;
  for (long p = 2; v > 1; ++p) {
    if (mpz_class(p) * p > v) {
      if (!v.fits_slong_p()) throw std::runtime_error("prime_sites: discriminant factor too large");
      out.push_back(v.get_si());
      break;
    }
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  return out;
}

Matrix trace_form(const FiniteAlgebra& A, const Matrix& basis) {
  const std::size_t k = basis.cols();
  std::vector<Matrix> L;
  for (std::size_t i = 0; i < k; ++i) L.push_back(A.left_mult_by(basis.col(i)));
  Matrix T(A.base(), k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Matrix P = L[i] * L[j];
      Scalar t = 0;
      for (std::size_t r = 0; r < P.rows(); ++r) t += P(r, r);
      T(i, j) = t;
    }
  return T;
}

mpz_class p_power(const mpz_class& d, long p, mpz_class* rest = nullptr) {
  mpz_class q = 1, r = d;
  while (r % p == 0) {
    r /= p;
    q *= p;
  }
  if (rest) *rest = r;
  return q;
}

}  // namespace

SiteCandidates prime_sites(const AlgebraPtr& A) {
  SiteCandidates out;
  const BaseRing& R = A->base();
  if (R.is_field()) {
    out.sites.push_back({R, 0});
    out.discriminant = 0;
    out.note = "field base: single site";
    return out;
  }
  const std::size_t n = A->rank();
  Matrix T = trace_form(*A, Matrix::identity(R, n));
  Matrix J = kernel(T);  // radical lattice J_Q meet A
  Matrix C;               // complement basis of J inside Z^n
  if (J.cols() == 0) {
    C = Matrix::identity(R, n);
  } else {
    Tidy t = tidy(plain_module(R, n, J));
    if (t.module.has_relations()) throw std::logic_error("prime_sites: radical lattice not saturated");
    C = t.to_old;
  }
  Matrix TB = C.transpose() * T * C;
  out.discriminant = mpz_class(determinant(TB));
  if (out.discriminant == 0) throw std::runtime_error("prime_sites: degenerate trace form modulo the radical");
  if (J.cols() > 0)
    out.note = "the rational radical is nonzero; sites are restricted to primes dividing the discriminant of A/J";
  for (long p : prime_factors(out.discriminant)) {
    auto Ap = reduce_mod(A, p);
    if (radical_basis(*Ap).cols() > 0) out.sites.push_back({R, p});
  }
  return out;
}

RInvariants p_part(const RInvariants& inv, long p) {
  RInvariants out;
  out.base = inv.base;
  out.free_rank = inv.free_rank;
  if (!inv.base.is_integers()) return inv;
  for (const auto& d : inv.torsion) {
    mpz_class q = p_power(d, p);
    if (q > 1) out.torsion.push_back(q);
  }
  return out;
}

Localized localize(const Module& M, const PrimeSite& site) {
  if (site.is_field_site() || !M.base.is_integers()) return {M, invariants(M)};
  Tidy t = tidy(M);
  const Module& Mt = t.module;
  const BaseRing& R = M.base;
  std::vector<Matrix> kill;
  for (std::size_t c = 0; c < Mt.relations.cols(); ++c) {
    std::size_t pos = 0;
    for (std::size_t r = 0; r < Mt.gens; ++r)
      if (Mt.relations(r, c) != 0) pos = r;
    mpz_class d = Mt.relations(pos, c).get_num(), rest;
    mpz_class q = p_power(d, site.prime, &rest);
    if (rest > 1) kill.push_back(Matrix::unit_column(R, Mt.gens, pos).scaled(Scalar(q)));
  }
  Module out = Mt;
  if (!kill.empty()) out = quotient(Mt, hcat(kill, R, Mt.gens)).module;
  return {out, p_part(invariants(M), site.prime)};
}

Submodule torsion_submodule(const Module& M, long p) {
  if (!M.base.is_integers()) throw std::invalid_argument("torsion_submodule: integer base required");
  Tidy t = tidy(M);
  const Module& Mt = t.module;
  const BaseRing& R = M.base;
  std::vector<Matrix> gens;
  for (std::size_t c = 0; c < Mt.relations.cols(); ++c) {
    std::size_t pos = 0;
    for (std::size_t r = 0; r < Mt.gens; ++r)
      if (Mt.relations(r, c) != 0) pos = r;
    mpz_class d = Mt.relations(pos, c).get_num(), rest;
    mpz_class q = p_power(d, p, &rest);
    if (q > 1) gens.push_back(Matrix::unit_column(R, Mt.gens, pos).scaled(Scalar(rest)));
  }
  Submodule s = r_submodule(Mt, gens.empty() ? Matrix(R, Mt.gens, 0) : hcat(gens, R, Mt.gens));
  return {s.module, t.to_old * s.inclusion};
}

LocalCohomology local_cohomology_graded(const GradedGroups& G, const PrimeSite& site) {
  LocalCohomology out;
  out.groups.base = G.base;
  for (const auto& [d, g] : G.groups) {
    if (site.is_field_site() || !g.base.is_integers()) {
      out.groups.groups.push_back({d, g});
      continue;
    }
    RInvariants q = p_part(g, site.prime);
    if (q.free_rank > 0)
      out.notes.push_back("degree " + std::to_string(d) + ": free part of rank " + std::to_string(q.free_rank) +
                          " dropped (torsion-free modules have no " + site.to_string() + "-torsion)");
    q.free_rank = 0;
    out.groups.groups.push_back({d, q});
  }
  return out;
}

RInvariants matlis_dual_finite(const RInvariants& G, const PrimeSite& site) {
  if (G.base.is_integers() && G.free_rank > 0)
    throw std::invalid_argument("matlis_dual_finite: infinite group (object-level Matlis duals are not modelled)");
  if (site.is_field_site() || !G.base.is_integers()) return G;
  RInvariants q = p_part(G, site.prime);
  return q;
}

std::string to_string(SiteStatus s) {
  switch (s) {
    case SiteStatus::Regular: return "regular";
    case SiteStatus::SingularCertified: return "singular (certified)";
    case SiteStatus::ProbablySingular: return "probably singular";
  }
  return "?";
}

std::vector<PrimeSite> SingularLocus::singular() const {
  std::vector<PrimeSite> out;
  for (const auto& c : candidates)
    if (c.status != SiteStatus::Regular) out.push_back(c.site);
  return out;
}

SingularLocus singular_locus(const AlgebraPtr& A, int depth) {
  SingularLocus out;
  SiteCandidates cand = prime_sites(A);
  out.note = cand.note;
  for (const auto& site : cand.sites) {
    AlgebraPtr F = site.is_field_site() ? A : reduce_mod(A, site.prime);
    SiteReport rep{site, SiteStatus::Regular, {}};
    bool certified = false, open = false;
    for (const auto& S : simple_modules(F)) {
      FinitenessVerdict v = proj_dim(S, depth);
      if (v.kind == Finiteness::InfiniteCertified) certified = true;
      if (v.kind == Finiteness::AtLeast) open = true;
      rep.simples.push_back(v);
    }
    rep.status = certified ? SiteStatus::SingularCertified : (open ? SiteStatus::ProbablySingular : SiteStatus::Regular);
    out.candidates.push_back(rep);
  }
  return out;
}

}  // namespace gorlab
