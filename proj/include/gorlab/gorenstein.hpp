#pragma once

#include "gorlab/support_local.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gorlab {

// omega = Hom_R(A, R) on the dual basis: (a.f)(x) = f(xa), (f.a)(x) = f(ax).
struct DualizingBimodule {
  Bimodule bimodule;
  Matrix trace_basis;       // coordinates of the dual basis elements e_i^* (identity)
  bool biduality_verified;  // Hom_R(omega, R) equals A_A on the nose
  Module left() const { return bimodule.as_left(); }
  Module right() const { return bimodule.as_right(); }
};
DualizingBimodule dualizing_bimodule(const AlgebraPtr& A);

// Raised when omega cannot be certified perfect on both sides.
struct PerfectionError : std::runtime_error {
  PerfectionError(const std::string& what, FinitenessVerdict l, FinitenessVerdict r)
      : std::runtime_error(what), left(std::move(l)), right(std::move(r)) {}
  FinitenessVerdict left, right;
};

// Bounded complex of bimodules (degrees -len..0), each term projective on both sides, with a
// quasi-isomorphism to omega.
struct OmegaHat {
  AlgebraPtr algebra;
  std::vector<Bimodule> terms;  // terms[k] in degree -len + k
  ChainComplex complex;         // the same data as env-modules
  Matrix augmentation;          // degree-0 term -> omega
  int length = 0;
  FinitenessVerdict left, right;
};
OmegaHat omega_hat(const AlgebraPtr& A, int depth = 12);

enum class GorensteinStatus { Gorenstein, NotGorenstein, Inconclusive };
std::string to_string(GorensteinStatus s);

struct SiteDimension {
  PrimeSite site;
  int left = 0, right = 0;  // injective dimension of A on each side, local at the site
};
struct CriterionReport {
  std::string name;
  std::string outcome;
  std::string detail;
};
struct GorensteinVerdict {
  GorensteinStatus status = GorensteinStatus::Inconclusive;
  std::vector<SiteDimension> dimensions;
  std::optional<FinitenessVerdict> failing;
  std::vector<CriterionReport> evidence;
  int depth = 0;
};
GorensteinVerdict gorenstein_check(const AlgebraPtr& A, int depth = 12);

// N(M) = Hom_A(omega, M) with the left action through the right action on omega.
Module nakayama(const Module& M);
// omega (x)_A M.
Module conakayama(const Module& M);

struct AdjunctionCheck {
  RInvariants lhs, rhs;  // Hom(conakayama(M), N), Hom(M, nakayama(N))
  bool natural_map_bijective = false;
  bool ok() const { return lhs == rhs && natural_map_bijective; }
};
AdjunctionCheck check_adjunction(const Module& M, const Module& N);

struct TiltingReport {
  int omega_hat_length = 0;
  std::vector<std::pair<int, RInvariants>> counit_homology, unit_homology;
  bool counit_iso = false, unit_iso = false;
  bool pass() const;
};
TiltingReport verify_tilting(const AlgebraPtr& A, const Module& M, int lo = -3, int hi = 3, int depth = 12);

}  // namespace gorlab
