#include "doctest.h"

#include "gorlab/duality_harness.hpp"
#include "gorlab/fixtures.hpp"

using namespace gorlab;

namespace {

const BaseRing Q = BaseRing::rationals();
const BaseRing Z = BaseRing::integers();

RInvariants zn(long n) {
  RInvariants r;
  r.base = Z;
  if (n > 1) r.torsion.push_back(mpz_class(n));
  return r;
}

RInvariants dims(std::size_t d) {
  RInvariants r;
  r.base = Q;
  r.free_rank = d;
  return r;
}

void check_rows(const DualityReport& r, int lo, int hi) {
  REQUIRE(r.rows.size() == static_cast<std::size_t>(hi - lo + 1));
  for (const auto& row : r.rows) {
    CHECK(row.comparable);
    CHECK_MESSAGE(row.match, "degree " << row.degree << ": " << row.lhs.to_string() << " vs " << row.rhs.to_string());
  }
}

}  // namespace

TEST_CASE("module names") {
  auto T = truncated_poly(3);
  CHECK(module_by_name(T, "k").gens == 1);
  CHECK(module_by_name(T, "A").gens == 3);
  CHECK(module_by_name(T, "A/x^2").gens == 2);
  CHECK(module_by_name(T, "A/(x^2)").gens == 2);
  CHECK(module_by_name(T, "top").gens == 1);
  CHECK(module_by_name(T, "S0").gens == 1);
  CHECK(module_by_name(T, "omega").gens == 3);
  CHECK(module_by_name(T, "k+A").gens == 4);
  auto G = cyclic_group_algebra(2, Z);
  CHECK(invariants(module_by_name(G, "Z/3")) == zn(3));
  CHECK_THROWS(module_by_name(T, "S1"));
  CHECK_THROWS(module_by_name(G, "top"));
  CHECK_THROWS(module_by_name(T, "nonsense"));
}

TEST_CASE("Serre duality over a field") {
  SUBCASE("k[x]/x^2, k against k") {
    auto A = truncated_poly(2);
    Module k = augmentation_module(A);
    auto r = verify_serre_duality_field(k, k, -3, 3);
    check_rows(r, -3, 3);
    for (const auto& row : r.rows) CHECK(row.lhs == dims(1));
    CHECK(r.pass());
  }
  SUBCASE("k[x]/x^3, k against A/x^2, both shapes") {
    auto A = truncated_poly(3);
    auto r = verify_serre_duality_field(augmentation_module(A), basis_quotient(A, 2), -2, 2);
    check_rows(r, -2, 2);
    for (const auto& row : r.rows) CHECK(row.lhs == dims(1));
    REQUIRE(r.alternate_rows.size() == r.rows.size());
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      CHECK(r.alternate_rows[i].match);
      CHECK(r.alternate_rows[i].rhs == r.rows[i].rhs);
    }
    CHECK(r.shift == -1);
    CHECK(r.pass());
  }
  SUBCASE("quantum exterior plane") {
    auto A = quantum_exterior(Scalar(2));
    Module k = augmentation_module(A);
    auto r = verify_serre_duality_field(k, k, -1, 1);
    check_rows(r, -1, 1);
    CHECK(r.pass());
  }
  SUBCASE("upper triangular: the stable category vanishes") {
    auto U = upper_triangular(2);
    Module S2 = vertex_simple(U, 2, 1);
    auto r = verify_serre_duality_field(S2, S2, -2, 2);
    CHECK(!r.notes.empty());
    for (const auto& row : r.rows) CHECK(row.lhs == dims(0));
    CHECK(r.pass());
  }
  CHECK_THROWS_AS(verify_serre_duality_field(augmentation_module(cyclic_group_algebra(2, Z)),
                                             augmentation_module(cyclic_group_algebra(2, Z)), 0, 0),
                  std::invalid_argument);
}

TEST_CASE("local duality over the integers") {
  SUBCASE("Z[C2] at 2: Tate cohomology of C2") {
    auto A = cyclic_group_algebra(2, Z);
    Module M = augmentation_module(A);
    auto r = verify_local_duality_integer(M, M, 2, -2, 2);
    check_rows(r, -2, 2);
    for (const auto& row : r.rows) CHECK(row.lhs == (row.degree % 2 == 0 ? zn(2) : zn(1)));
    CHECK(r.shift == 0);
    CHECK(r.pass());
  }
  SUBCASE("Z[C6] at 5 is vacuous, at 2 and 3 it is not") {
    auto A = cyclic_group_algebra(6, Z);
    Module M = augmentation_module(A);
    auto r5 = verify_local_duality_integer(M, M, 5, -1, 1);
    check_rows(r5, -1, 1);
    for (const auto& row : r5.rows) CHECK(row.lhs == zn(1));
    CHECK(!r5.notes.empty());
    auto r2 = verify_local_duality_integer(M, M, 2, 0, 0);
    check_rows(r2, 0, 0);
    CHECK(r2.rows[0].lhs == zn(2));
    auto r3 = verify_local_duality_integer(M, M, 3, 0, 0);
    CHECK(r3.rows[0].lhs == zn(3));
    CHECK(r3.pass());
  }
}

TEST_CASE("trace pairing probe") {
  auto T2 = truncated_poly(2);
  Module k2 = augmentation_module(T2);
  auto p = trace_pairing_probe(k2, k2);
  CHECK(p.dim_mn == 1);
  CHECK(p.dim_nsm == 1);
  CHECK(p.pass());
  auto T3 = truncated_poly(3);
  auto q = trace_pairing_probe(augmentation_module(T3), basis_quotient(T3, 2));
  CHECK(q.dim_mn == 1);
  CHECK(q.pass());
}

TEST_CASE("report driver") {
  ReportConfig cfg;
  cfg.lo = -1;
  cfg.hi = 1;
  auto r = report(truncated_poly(2), cfg);
  CHECK(r.exit_code() == 0);
  CHECK(r.gorenstein.has_value());
  CHECK(r.duality.size() == 1);
  CHECK(r.pairings.size() == 1);

  auto g = report(cyclic_group_algebra(2, Z), cfg);
  CHECK(g.exit_code() == 0);
  REQUIRE(g.duality.size() == 1);
  CHECK(g.duality[0].site.prime == 2);
  CHECK(g.pairings.empty());

  auto f = report(commutative_fat_point(), cfg);
  CHECK(f.gorenstein->status == GorensteinStatus::NotGorenstein);
  bool skipped = false;
  for (const auto& s : f.sections)
    if (s.name == "duality") skipped = s.status == "skipped" && !s.reason.empty();
  CHECK(skipped);
  CHECK(f.exit_code() == 0);
}
