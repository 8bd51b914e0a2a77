#include "doctest.h"

#include "gorlab/fixtures.hpp"
#include "gorlab/support_local.hpp"

using namespace gorlab;

namespace {

const BaseRing Z = BaseRing::integers();

Module cyclic_group(const std::vector<long>& orders) {
  const std::size_t g = orders.size();
  Matrix rel(Z, g, g);
  for (std::size_t i = 0; i < g; ++i) rel.set(i, i, Scalar(orders[i]));
  return plain_module(Z, g, rel);
}

RInvariants group(std::size_t free, std::vector<long> tors) {
  RInvariants r;
  r.base = Z;
  r.free_rank = free;
  for (long t : tors) r.torsion.push_back(mpz_class(t));
  return r;
}

std::vector<long> primes(const std::vector<PrimeSite>& s) {
  std::vector<long> out;
  for (const auto& p : s) out.push_back(p.prime);
  return out;
}

}  // namespace

TEST_CASE("prime sites") {
  CHECK(prime_sites(truncated_poly(2)).sites.size() == 1);
  CHECK(prime_sites(truncated_poly(2)).sites[0].is_field_site());
  CHECK(primes(prime_sites(cyclic_group_algebra(6, Z)).sites) == std::vector<long>{2, 3});
  CHECK(primes(prime_sites(cyclic_group_algebra(4, Z)).sites) == std::vector<long>{2});
  CHECK(prime_sites(truncated_poly(1, Z)).sites.empty());
}

TEST_CASE("localization") {
  CHECK(localize(cyclic_group({12}), {Z, 2}).invariants == group(0, {4}));
  CHECK(localize(cyclic_group({12}), {Z, 3}).invariants == group(0, {3}));
  auto A = cyclic_group_algebra(3, Z);
  CHECK(localize(augmentation_module(A), {Z, 5}).invariants == group(1, {}));
  CHECK(localize(augmentation_module(A, 3), {Z, 2}).invariants == group(0, {}));
  CHECK(localize(augmentation_module(A, 3), {Z, 2}).module.gens == 0);
}

TEST_CASE("torsion functor") {
  Submodule t = torsion_submodule(cyclic_group({12}), 2);
  CHECK(invariants(t.module) == group(0, {4}));
  CHECK(invariants(torsion_submodule(cyclic_group({2, 9}), 2).module) == group(0, {2}));
  auto A = cyclic_group_algebra(2, Z);
  CHECK(torsion_submodule(regular_module(A), 2).module.gens == 0);
  // Idempotence and compatibility with localization.
  for (const auto& orders : {std::vector<long>{12}, {2, 9}, {4, 6, 8}, {5}}) {
    Module M = cyclic_group(orders);
    for (long p : {2L, 3L, 5L}) {
      Module G = torsion_submodule(M, p).module;
      CHECK(invariants(torsion_submodule(G, p).module) == invariants(G));
      CHECK(invariants(G) == localize(M, {Z, p}).invariants);
      CHECK(invariants(localize(G, {Z, p}).module) == invariants(G));
    }
  }
  CHECK_THROWS(torsion_submodule(augmentation_module(truncated_poly(2)), 2));
}

TEST_CASE("graded local cohomology and matlis duality") {
  GradedGroups g;
  g.base = Z;
  g.groups = {{0, group(0, {6})}, {1, group(1, {4})}};
  LocalCohomology l2 = local_cohomology_graded(g, {Z, 2});
  CHECK(*l2.groups.at(0) == group(0, {2}));
  CHECK(*l2.groups.at(1) == group(0, {4}));
  CHECK_FALSE(l2.notes.empty());
  LocalCohomology l5 = local_cohomology_graded(g, {Z, 5});
  CHECK(l5.groups.at(0)->is_zero());
  CHECK(l5.groups.at(1)->is_zero());

  CHECK(matlis_dual_finite(group(0, {8}), {Z, 2}) == group(0, {8}));
  CHECK(matlis_dual_finite(group(0, {2, 4}), {Z, 2}) == group(0, {2, 4}));
  CHECK(matlis_dual_finite(group(0, {6}), {Z, 2}) == group(0, {2}));
  for (const auto& t : {std::vector<long>{8}, {2, 4}, {2, 2, 16}})
    CHECK(matlis_dual_finite(matlis_dual_finite(group(0, t), {Z, 2}), {Z, 2}) == group(0, t));
  CHECK_THROWS(matlis_dual_finite(group(1, {}), {Z, 2}));
}

TEST_CASE("singular locus") {
  CHECK(singular_locus(upper_triangular(2)).singular().empty());
  SingularLocus t = singular_locus(truncated_poly(2));
  REQUIRE(t.singular().size() == 1);
  CHECK(t.singular()[0].is_field_site());
  CHECK(t.candidates[0].status == SiteStatus::SingularCertified);
  SingularLocus z = singular_locus(cyclic_group_algebra(6, Z));
  CHECK(primes(z.singular()) == std::vector<long>{2, 3});
  for (const auto& c : z.candidates) {
    CHECK(c.site.prime != 5);
    CHECK(c.status == SiteStatus::SingularCertified);
  }
}
