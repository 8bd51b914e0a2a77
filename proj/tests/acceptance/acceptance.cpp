// Acceptance checks 1-9; one PASS/FAIL line each, exit status 1 if any fails.
#include "gorlab/duality_harness.hpp"
#include "gorlab/fixtures.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace gorlab;

namespace {

const BaseRing Q = BaseRing::rationals();
const BaseRing Z = BaseRing::integers();

struct Fixture {
  AlgebraPtr algebra;
  std::vector<std::string> names;
  std::vector<Module> modules;
};

std::vector<Fixture> corpus() {
  std::vector<std::pair<std::string, std::vector<std::string>>> presets = {
      {"truncated_poly(2)", {"k", "A"}},
      {"truncated_poly(3)", {"k", "A/x^2", "A"}},
      {"truncated_poly(4)", {"k", "A/x^2", "A/x^3"}},
      {"upper_triangular(2)", {"S0", "S1", "A", "omega"}},
      {"quantum_exterior(2)", {"k", "A"}},
      {"quantum_exterior(3)", {"k"}},
      {"quantum_exterior(2,F5)", {"k"}},
      {"group_algebra(cyclic,2,Z)", {"Z", "Z/2", "A"}},
      {"group_algebra(cyclic,3,Z)", {"Z", "Z/3"}},
      {"group_algebra(cyclic,6,Z)", {"Z", "Z/2"}},
  };
  std::vector<Fixture> out;
  for (const auto& [a, ms] : presets) {
    Fixture f{algebra_by_name(a), ms, {}};
    for (const auto& m : ms) f.modules.push_back(module_by_name(f.algebra, m));
    out.push_back(std::move(f));
  }
  return out;
}

RInvariants zn(long n) {
  RInvariants r;
  r.base = Z;
  if (n > 1) r.torsion.push_back(mpz_class(n));
  return r;
}

bool ext_vanishes(const GradedGroups& g, int from, int to) {
  for (int i = from; i <= to; ++i)
    if (const RInvariants* x = g.at(i); !x || !x->is_zero()) return false;
  return true;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 5) failures.push_back(what);
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Outcome tate_regression() {
  Outcome o;
  for (long n : {2, 3, 4, 6}) {
    auto t0 = Clock::now();
    auto A = cyclic_group_algebra(static_cast<std::size_t>(n), Z);
    Module M = augmentation_module(A);
    TateGroups T = tate_ext(M, M, -4, 4);
    for (int i = -4; i <= 4; ++i) {
      const RInvariants* g = T.groups.at(i);
      o.require(g && *g == (i % 2 == 0 ? zn(n) : zn(1)), "C" + std::to_string(n) + " degree " + std::to_string(i));
    }
    o.require(!T.approximated, "C" + std::to_string(n) + ": Z was approximated");
    double s = seconds_since(t0);
    o.require(s < 5.0, "C" + std::to_string(n) + " took " + std::to_string(s) + " s");
  }
  o.detail = "Z[C_n], n in {2,3,4,6}, degrees -4..4";
  return o;
}

Outcome local_duality() {
  Outcome o;
  auto t0 = Clock::now();
  std::vector<std::pair<std::size_t, long>> cases = {{2, 2}, {6, 2}, {6, 3}, {6, 5}};
  for (auto [n, p] : cases) {
    auto A = cyclic_group_algebra(n, Z);
    Module M = augmentation_module(A);
    DualityReport r = verify_local_duality_integer(M, M, p, -2, 2);
    std::string tag = "C" + std::to_string(n) + " at " + std::to_string(p);
    o.require(r.pass(), tag + " failed");
    for (const auto& row : r.rows) o.require(row.comparable && row.match, tag + " degree " + std::to_string(row.degree));
  }
  o.require(seconds_since(t0) < 30.0, "over 30 s");
  o.detail = "Z[C2] at 2, Z[C6] at 2, 3, 5, degrees -2..2";
  return o;
}

std::vector<std::pair<std::string, std::pair<Module, Module>>> serre_pairs() {
  std::vector<std::pair<std::string, std::pair<Module, Module>>> out;
  auto T2 = truncated_poly(2), T3 = truncated_poly(3);
  Module k2 = augmentation_module(T2);
  out.push_back({"tp(2) k,k", {k2, k2}});
  std::vector<std::pair<std::string, Module>> m3 = {{"k", augmentation_module(T3)}, {"A/x^2", basis_quotient(T3, 2)}};
  for (const auto& a : m3)
    for (const auto& b : m3) out.push_back({"tp(3) " + a.first + "," + b.first, {a.second, b.second}});
  return out;
}

Outcome serre_duality() {
  Outcome o;
  auto t0 = Clock::now();
  for (const auto& [tag, mn] : serre_pairs()) {
    DualityReport r = verify_serre_duality_field(mn.first, mn.second, -3, 3);
    o.require(r.pass(), tag + " failed");
    for (std::size_t i = 0; i < r.rows.size() && i < r.alternate_rows.size(); ++i)
      o.require(r.rows[i].rhs == r.alternate_rows[i].rhs, tag + ": shift forms disagree at " + std::to_string(r.rows[i].degree));
  }
  o.require(seconds_since(t0) < 30.0, "over 30 s");
  o.detail = "tp(2) and tp(3) over {k, A/x^2}, degrees -3..3, both shift forms";
  return o;
}

Outcome trace_pairing() {
  Outcome o;
  for (const auto& [tag, mn] : serre_pairs()) {
    PairingReport p = trace_pairing_probe(mn.first, mn.second);
    o.require(p.pass(), tag + ": kernels " + std::to_string(p.left_kernel) + "," + std::to_string(p.right_kernel));
  }
  o.detail = "same pairs as criterion 3";
  return o;
}

Outcome gorenstein_detection() {
  Outcome o;
  auto t0 = Clock::now();
  std::vector<AlgebraPtr> yes = {truncated_poly(1), truncated_poly(2), truncated_poly(3), truncated_poly(4), upper_triangular(2),
                                 quantum_exterior(Scalar(2)), quantum_exterior(Scalar(3)),
                                 quantum_exterior(Scalar(2), BaseRing::prime_field(5))};
  for (std::size_t n = 1; n <= 6; ++n) yes.push_back(cyclic_group_algebra(n, Z));
  for (const auto& A : yes) {
    GorensteinVerdict v = gorenstein_check(A, 12);
    o.require(v.status == GorensteinStatus::Gorenstein, A->name() + ": " + to_string(v.status));
  }
  GorensteinVerdict f = gorenstein_check(commutative_fat_point(), 12);
  o.require(f.status == GorensteinStatus::NotGorenstein, "fat point: " + to_string(f.status));
  o.require(f.failing && f.failing->kind == Finiteness::InfiniteCertified && !f.failing->certificate.empty(),
            "fat point: no recurrence certificate");
  o.require(seconds_since(t0) < 60.0, "over 60 s");
  o.detail = std::to_string(yes.size()) + " Gorenstein fixtures, fat point NotGorenstein";
  return o;
}

Outcome singular_loci() {
  Outcome o;
  auto t0 = Clock::now();
  SingularLocus c6 = singular_locus(cyclic_group_algebra(6, Z));
  auto s6 = c6.singular();
  o.require(s6.size() == 2 && s6[0].prime == 2 && s6[1].prime == 3, "Z[C6] locus");
  for (const auto& c : c6.candidates)
    if (c.site.prime == 2 || c.site.prime == 3) o.require(c.status == SiteStatus::SingularCertified, "Z[C6] not certified");
  o.require(singular_locus(upper_triangular(2)).singular().empty(), "ut(2) locus not empty");
  auto t2 = singular_locus(truncated_poly(2)).singular();
  o.require(t2.size() == 1 && t2[0].is_field_site(), "tp(2) locus");
  o.require(seconds_since(t0) < 30.0, "over 30 s");
  o.detail = "Z[C6] = {2,3}, ut(2) empty, tp(2) = {site}";
  return o;
}

Outcome tilting() {
  Outcome o;
  auto U = upper_triangular(2);
  for (std::size_t i = 0; i < 2; ++i)
    o.require(verify_tilting(U, vertex_simple(U, 2, i), -3, 3).pass(), "ut(2) simple " + std::to_string(i));
  auto T = truncated_poly(3);
  o.require(verify_tilting(T, basis_quotient(T, 2), -3, 3).pass(), "tp(3) A/x^2");
  o.detail = "ut(2) both simples, tp(3) A/x^2, window -3..3";
  return o;
}

Outcome approximations(const std::vector<Fixture>& fx) {
  Outcome o;
  std::size_t count = 0;
  for (const auto& f : fx) {
    std::vector<Module> gps;
    std::vector<std::pair<std::string, Module>> ys;
    for (std::size_t i = 0; i < f.modules.size(); ++i) {
      const std::string tag = f.algebra->name() + " " + f.names[i];
      ApproximationTriple t = gprojective_approximation(f.modules[i]);
      ++count;
      o.require(t.exact, tag + ": sequence not exact");
      o.require(t.x_verdict.yes(), tag + ": X not certified G-projective");
      o.require(t.y_dimension.kind == Finiteness::Finite, tag + ": Y without finite projective dimension");
      gps.push_back(t.gprojective_part);
      if (is_gprojective(f.modules[i]).yes()) gps.push_back(f.modules[i]);
      ys.push_back({tag, t.finite_part});
    }
    for (const auto& [tag, Y] : ys)
      for (const auto& G : gps) o.require(ext_vanishes(ext(G, Y, 3), 1, 3), tag + ": Ext^i(G, Y) != 0");
  }
  o.detail = std::to_string(count) + " fixtures, orthogonality for 1 <= i <= 3";
  return o;
}

Outcome properties(const std::vector<Fixture>& fx) {
  Outcome o;
  std::size_t runs = 0;
  // Dimension shift: Ext^{i+1}(M, N) = Ext^i(Omega M, N) for i >= 1.
  for (const auto& f : fx)
    for (std::size_t a = 0; a < f.modules.size(); ++a)
      for (std::size_t b = 0; b < f.modules.size(); ++b) {
        const Module &M = f.modules[a], &N = f.modules[b];
        GradedGroups e = ext(M, N, 3), s = ext(syzygy(M, 1), N, 2);
        for (int i = 1; i <= 2; ++i)
          o.require(*e.at(i + 1) == *s.at(i), "dimension shift " + f.algebra->name() + " " + f.names[a] + "," + f.names[b]);
        ++runs;
      }
  // Stability: adding a free summand leaves Tate cohomology unchanged.
  for (const auto& f : fx)
    for (std::size_t a = 0; a < f.modules.size(); ++a) {
      const Module& M = f.modules[a];
      const Module& N = f.modules[0];
      if (!is_gprojective(M).yes()) continue;
      GradedGroups t = tate_ext(M, N, -1, 1).groups;
      GradedGroups u = tate_ext(direct_sum(M, regular_module(f.algebra)), N, -1, 1).groups;
      for (int i = -1; i <= 1; ++i) o.require(*t.at(i) == *u.at(i), "free summand " + f.algebra->name() + " " + f.names[a]);
      ++runs;
    }
  // Smith normal form: U m V = D with unimodular U, V.
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> entry(-6, 6), dim(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    Matrix m(Z, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar(entry(rng)));
    SmithForm s = smith_normal_form(m);
    Scalar du = determinant(s.U), dv = determinant(s.V);
    o.require((du == 1 || du == -1) && (dv == 1 || dv == -1), "SNF transform not unimodular");
    o.require(s.U * m * s.V == s.D, "SNF: U m V != D");
    o.require(s.U * s.U_inverse == Matrix::identity(Z, r), "SNF: U_inverse");
    ++runs;
  }
  // Adjunction between conakayama and nakayama.
  for (const auto& f : fx) {
    if (!f.algebra->base().is_field()) continue;
    for (std::size_t a = 0; a < f.modules.size(); ++a)
      for (std::size_t b = 0; b < f.modules.size(); ++b) {
        o.require(check_adjunction(f.modules[a], f.modules[b]).ok(), "adjunction " + f.algebra->name() + " " + f.names[a] + "," + f.names[b]);
        ++runs;
      }
  }
  // Torsion functor is idempotent; Matlis duality is an involution on finite groups.
  for (const auto& f : fx) {
    if (!f.algebra->base().is_integers()) continue;
    for (std::size_t a = 0; a < f.modules.size(); ++a)
      for (long p : {2L, 3L, 5L}) {
        Submodule g = torsion_submodule(f.modules[a], p);
        Submodule gg = torsion_submodule(g.module, p);
        o.require(invariants(gg.module) == invariants(g.module), "torsion idempotence " + f.names[a]);
        RInvariants t = invariants(g.module);
        PrimeSite site{Z, p};
        o.require(matlis_dual_finite(matlis_dual_finite(t, site), site) == t, "matlis involution " + f.names[a]);
        runs += 2;
      }
  }
  std::uniform_int_distribution<int> small(2, 30), count(0, 3);
  for (int trial = 0; trial < 60; ++trial) {
    RInvariants g;
    g.base = Z;
    std::vector<long> parts;
    for (int i = count(rng); i > 0; --i) parts.push_back(small(rng));
    Matrix rel(Z, parts.size(), parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) rel.set(i, i, Scalar(parts[i]));
    g = cokernel_invariants(rel);
    for (long p : {2L, 3L, 5L}) {
      PrimeSite site{Z, p};
      o.require(matlis_dual_finite(matlis_dual_finite(g, site), site) == p_part(g, p), "matlis involution on " + g.to_string());
      ++runs;
    }
  }
  o.detail = std::to_string(runs) + " property runs";
  return o;
}

}  // namespace

int main() {
  const auto fx = corpus();
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Tate regression, cyclic groups", tate_regression},
      {"local duality over Z", local_duality},
      {"Serre duality over a field", serre_duality},
      {"trace pairing", trace_pairing},
      {"Gorenstein detection", gorenstein_detection},
      {"singular locus", singular_loci},
      {"tilting", tilting},
      {"approximation invariants", [&] { return approximations(fx); }},
      {"property suites", [&] { return properties(fx); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    double s = seconds_since(t0);
    std::ostringstream line;
    line << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << " [" << std::fixed << std::setprecision(2) << s << " s] "
         << criteria[i].first;
    if (!o.detail.empty()) line << " (" << o.detail << ")";
    for (const auto& f : o.failures) line << "; " << f;
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failed ? 1 : 0;
}
