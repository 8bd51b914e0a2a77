#pragma once

#include "gorlab/homological.hpp"

#include <string>
#include <vector>

namespace gorlab {

// A prime of the base: p for Z, or the zero ideal of a field (prime = 0).
struct PrimeSite {
  BaseRing base;
  long prime = 0;
  bool is_field_site() const { return prime == 0; }
  int krull_dim() const { return is_field_site() ? 0 : 1; }
  std::string to_string() const;
  bool operator==(const PrimeSite& o) const { return base == o.base && prime == o.prime; }
};

struct SiteCandidates {
  std::vector<PrimeSite> sites;
  mpz_class discriminant;  // of the trace form of A modulo its radical lattice (Z only)
  std::string note;
};
SiteCandidates prime_sites(const AlgebraPtr& A);

// p-part of a finitely generated Z-module: the invariants of M_(p) (free rank kept).
RInvariants p_part(const RInvariants& inv, long p);

struct Localized {
  Module module;         // M modulo its prime-to-p torsion
  RInvariants invariants;  // free rank and p-primary invariant factors
};
Localized localize(const Module& M, const PrimeSite& site);

// p-power torsion submodule with its inclusion (Gamma_{V(p)} M).
Submodule torsion_submodule(const Module& M, long p);

struct LocalCohomology {
  GradedGroups groups;
  std::vector<std::string> notes;
};
LocalCohomology local_cohomology_graded(const GradedGroups& G, const PrimeSite& site);

// Matlis dual at p of a finite group (or finite-dimensional space over a field).
RInvariants matlis_dual_finite(const RInvariants& G, const PrimeSite& site);

enum class SiteStatus { Regular, SingularCertified, ProbablySingular };
std::string to_string(SiteStatus s);

struct SiteReport {
  PrimeSite site;
  SiteStatus status;
  std::vector<FinitenessVerdict> simples;  // proj_dim of each simple of A/pA
};
struct SingularLocus {
  std::vector<SiteReport> candidates;
  std::vector<PrimeSite> singular() const;
  std::string note;
};
SingularLocus singular_locus(const AlgebraPtr& A, int depth = 12);

}  // namespace gorlab
