#include "gorlab/duality_harness.hpp"

#include "gorlab/fixtures.hpp"

#include <algorithm>

namespace gorlab {

bool DualityReport::pass() const {
  if (rows.empty()) return false;
  for (const auto& r : rows)
    if (!r.match) return false;
  for (const auto& r : alternate_rows)
    if (!r.match) return false;
  return true;
}

namespace {

Module through_gp(const Module& X, const std::string& name, int depth, std::vector<std::string>& notes) {
  GProjVerdict v = is_gprojective(X, depth);
  if (v.yes()) return X;
  if (v.answer == GAnswer::Inconclusive) throw std::runtime_error(name + ": G-projectivity undecided (" + v.detail + ")");
  notes.push_back(name + " replaced by its G-projective approximation");
  return gprojective_approximation(X, depth).gprojective_part;
}

DegreeRow field_row(int i, const RInvariants& lhs, const RInvariants* rhs, const PrimeSite& site) {
  DegreeRow r;
  r.degree = i;
  r.lhs = matlis_dual_finite(lhs, site);
  if (!rhs) {
    r.comparable = false;
    r.note = "right-hand degree not computed";
    return r;
  }
  r.rhs = *rhs;
  r.match = r.lhs == r.rhs;
  return r;
}

}  // namespace

DualityReport verify_serre_duality_field(const Module& M, const Module& N, int lo, int hi, int depth) {
  if (!M.base.is_field()) throw std::invalid_argument("verify_serre_duality_field: field base required");
  if (lo > hi) throw std::invalid_argument("verify_serre_duality_field: empty range");
  DualityReport R;
  R.kind = "serre";
  R.algebra = M.algebra->name();
  R.site = PrimeSite{M.base, 0};
  R.shift = -1;
  Module Mg = through_gp(M, "M", depth, R.notes), Ng = through_gp(N, "N", depth, R.notes);
  // Left side.
  GradedGroups lhs = tate_ext(Mg, Ng, lo, hi, depth).groups;
  // Right side against GP(omega (x) M) with shift d(p) - i = -1 - i.
  Module W = gprojective_approximation(conakayama(Mg), depth).gprojective_part;
  GradedGroups rhs = tate_ext(Ng, W, -1 - hi, -1 - lo, depth).groups;
  // Right side against the Serre operator Omega GP(omega (x) M) with shift -i.
  Module S = serre_operator(Mg, 0, depth);
  GradedGroups alt = tate_ext(Ng, S, -hi, -lo, depth).groups;
  for (int i = lo; i <= hi; ++i) {
    R.rows.push_back(field_row(i, *lhs.at(i), rhs.at(-1 - i), R.site));
    R.alternate_rows.push_back(field_row(i, *lhs.at(i), alt.at(-i), R.site));
  }
  return R;
}

DualityReport verify_local_duality_integer(const Module& M, const Module& N, long p, int lo, int hi, int depth) {
  if (!M.base.is_integers()) throw std::invalid_argument("verify_local_duality_integer: integer base required");
  if (lo > hi) throw std::invalid_argument("verify_local_duality_integer: empty range");
  DualityReport R;
  R.kind = "local";
  R.algebra = M.algebra->name();
  R.site = PrimeSite{M.base, p};
  R.shift = R.site.krull_dim() - 1;
  const int d = R.shift;
  SiteCandidates cands = prime_sites(M.algebra);
  if (std::find(cands.sites.begin(), cands.sites.end(), R.site) == cands.sites.end())
    R.notes.push_back("p = " + std::to_string(p) + " is not a candidate site; both sides are expected to vanish");
  Module Mg = through_gp(M, "M", depth, R.notes), Ng = through_gp(N, "N", depth, R.notes);
  GradedGroups lhs = tate_ext(Mg, Ng, lo, hi, depth).groups;
  Module S = serre_operator(Mg, 1, depth);
  GradedGroups rhs_raw = tate_ext(Ng, S, d - hi, d - lo, depth).groups;
  LocalCohomology rhs = local_cohomology_graded(rhs_raw, R.site);
  for (const auto& n : rhs.notes) R.notes.push_back(n);
  for (int i = lo; i <= hi; ++i) {
    DegreeRow row;
    row.degree = i;
    const RInvariants& L = *lhs.at(i);
    const RInvariants& Rr = *rhs_raw.at(d - i);
    if (L.free_rank > 0 || Rr.free_rank > 0) {
      row.comparable = false;
      row.lhs = L;
      row.rhs = Rr;
      row.note = "not comparable at this shadow level: infinite group";
      R.rows.push_back(row);
      continue;
    }
    row.lhs = matlis_dual_finite(L, R.site);
    row.rhs = *rhs.groups.at(d - i);
    row.match = row.lhs == row.rhs;
    R.rows.push_back(row);
  }
  return R;
}

PairingReport trace_pairing_probe(const Module& M, const Module& N, int depth) {
  if (!M.base.is_field()) throw std::invalid_argument("trace_pairing_probe: field base required");
  const BaseRing& K = M.base;
  Module S = serre_operator(M, 0, depth);
  StableHom h1 = stable_hom(M, N), h2 = stable_hom(N, S), h3 = stable_hom(M, S);
  PairingReport r;
  r.dim_mn = h1.module.gens;
  r.dim_nsm = h2.module.gens;
  r.dim_msm = h3.module.gens;
  const std::size_t a = r.dim_mn, b = r.dim_nsm, c = r.dim_msm;
  std::vector<std::vector<Matrix>> cls(a, std::vector<Matrix>(b));
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) cls[i][j] = h3.class_of(h2.representatives[j] * h1.representatives[i]);
  Matrix L(K, c * b, a), Rm(K, c * a, b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      L.set_block(j * c, i, cls[i][j]);
      Rm.set_block(i * c, j, cls[i][j]);
    }
  r.left_kernel = a - (L.empty() ? 0 : rank(L));
  r.right_kernel = b - (Rm.empty() ? 0 : rank(Rm));
  return r;
}

int RunReport::exit_code() const {
  bool inconclusive = false;
  for (const auto& s : sections) {
    if (s.status == "fail") return 1;
    if (s.status == "inconclusive") inconclusive = true;
  }
  return inconclusive ? 2 : 0;
}

RunReport report(const AlgebraPtr& A, const ReportConfig& cfg) {
  RunReport out;
  out.algebra = A->name();
  bool gorenstein = true;
  std::string not_gor_reason;
  if (cfg.gorenstein || cfg.duality || cfg.pairing) {
    GorensteinVerdict v = gorenstein_check(A, cfg.depth);
    gorenstein = v.status == GorensteinStatus::Gorenstein;
    not_gor_reason = "algebra is " + to_string(v.status);
    if (cfg.gorenstein) {
      std::string st = v.status == GorensteinStatus::Inconclusive ? "inconclusive" : "pass";
      out.sections.push_back({"gorenstein", st, "verdict " + to_string(v.status)});
      out.gorenstein = v;
    }
  }
  if (cfg.singular_locus) {
    SingularLocus s = singular_locus(A, cfg.depth);
    bool probable = false;
    for (const auto& c : s.candidates) probable = probable || c.status == SiteStatus::ProbablySingular;
    out.sections.push_back({"singular_locus", probable ? "inconclusive" : "pass", s.note});
    out.singular = s;
  }
  std::vector<std::string> names = cfg.modules;
  if (names.empty()) names = {A->augmentation ? "k" : "S0"};
  if (names.size() == 1) names.push_back(names[0]);
  auto guarded = [&](const std::string& name, auto&& body) {
    if (!gorenstein) {
      out.sections.push_back({name, "skipped", not_gor_reason});
      return;
    }
    try {
      body();
    } catch (const std::exception& e) {
      out.sections.push_back({name, "inconclusive", e.what()});
    }
  };
  if (cfg.duality) {
    guarded("duality", [&] {
      Module M = module_by_name(A, names[0]), N = module_by_name(A, names[1]);
      if (A->base().is_field()) {
        DualityReport d = verify_serre_duality_field(M, N, cfg.lo, cfg.hi, cfg.depth);
        d.modules = {names[0], names[1]};
        out.sections.push_back({"duality serre", d.pass() ? "pass" : "fail", names[0] + ", " + names[1]});
        out.duality.push_back(d);
      } else {
        std::vector<long> primes = cfg.primes;
        if (primes.empty())
          for (const auto& s : prime_sites(A).sites) primes.push_back(s.prime);
        for (long p : primes) {
          DualityReport d = verify_local_duality_integer(M, N, p, cfg.lo, cfg.hi, cfg.depth);
          d.modules = {names[0], names[1]};
          out.sections.push_back({"duality local at " + std::to_string(p), d.pass() ? "pass" : "fail", names[0] + ", " + names[1]});
          out.duality.push_back(d);
        }
      }
    });
  }
  if (cfg.pairing && A->base().is_field()) {
    guarded("pairing", [&] {
      Module M = module_by_name(A, names[0]), N = module_by_name(A, names[1]);
      PairingReport p = trace_pairing_probe(M, N, cfg.depth);
      p.modules = {names[0], names[1]};
      out.sections.push_back({"pairing", p.pass() ? "pass" : "fail", names[0] + ", " + names[1]});
      out.pairings.push_back(p);
    });
  }
  return out;
}

}  // namespace gorlab
