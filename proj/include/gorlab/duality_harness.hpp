#pragma once

#include "gorlab/approximation.hpp"
#include "gorlab/gorenstein.hpp"
#include "gorlab/support_local.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gorlab {

struct DegreeRow {
  int degree = 0;
  RInvariants lhs, rhs;
  bool comparable = true;  // false when a group is infinite at this shadow level
  bool match = false;
  std::string note;
};

struct PairingReport {
  std::vector<std::string> modules;
  std::size_t dim_mn = 0, dim_nsm = 0, dim_msm = 0;  // stable Hom(M,N), (N,SM), (M,SM)
  std::size_t left_kernel = 0, right_kernel = 0;
  bool pass() const { return left_kernel == 0 && right_kernel == 0; }
};

struct DualityReport {
  std::string kind;  // "serre" or "local"
  std::string algebra;
  std::vector<std::string> modules;
  PrimeSite site;
  int shift = 0;  // d(p)
  std::vector<DegreeRow> rows;
  // Serre duality in its second shape: Ext-hat^i(M,N) against Ext-hat^{-i}(N, Omega GP(omega (x) M)).
  std::vector<DegreeRow> alternate_rows;
  std::vector<std::string> notes;
  bool pass() const;
};

// dim Ext-hat^i(M,N) = dim Ext-hat^{-1-i}(N, GP(omega (x) M)) and = dim Ext-hat^{-i}(N, S M), S = serre_operator(-, 0).
DualityReport verify_serre_duality_field(const Module& M, const Module& N, int lo, int hi, int depth = 12);
// Matlis dual of Ext-hat^i(M,N) against the p-primary part of Ext-hat^{d(p)-i}(N, S M), d(p) = 0, S = serre_operator(-, 1).
DualityReport verify_local_duality_integer(const Module& M, const Module& N, long p, int lo, int hi, int depth = 12);
// Composition stable Hom(N, SM) x stable Hom(M, N) -> stable Hom(M, SM) has no kernel on either side.
PairingReport trace_pairing_probe(const Module& M, const Module& N, int depth = 12);

struct ReportConfig {
  bool gorenstein = true;
  bool singular_locus = true;
  bool duality = true;
  bool pairing = true;
  int depth = 12;
  int lo = -2, hi = 2;
  std::vector<std::string> modules;  // names for M and N; defaults to the augmentation module
  std::vector<long> primes;          // defaults to prime_sites
};

struct SectionResult {
  std::string name;
  std::string status;  // "pass", "fail", "inconclusive", "skipped"
  std::string reason;
};

struct RunReport {
  std::string algebra;
  std::optional<GorensteinVerdict> gorenstein;
  std::optional<SingularLocus> singular;
  std::vector<DualityReport> duality;
  std::vector<PairingReport> pairings;
  std::vector<SectionResult> sections;
  int exit_code() const;  // 0 all pass, 1 any failure, 2 inconclusive present
};
RunReport report(const AlgebraPtr& A, const ReportConfig& config);

}  // namespace gorlab
