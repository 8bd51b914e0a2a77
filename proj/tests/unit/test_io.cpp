#include "doctest.h"

#include "gorlab/fixtures.hpp"
#include "gorlab/io.hpp"

#include <cstdio>
#include <fstream>

using namespace gorlab;

TEST_CASE("algebra JSON round trip") {
  for (const char* name : {"truncated_poly(3)", "quantum_exterior(2/3)", "group_algebra(cyclic,3,Z)", "upper_triangular(2,F5)"}) {
    auto A = algebra_by_name(name);
    Json j = algebra_to_json(*A);
    auto B = algebra_from_json(Json::parse(j.dump()));
    CHECK(*A == *B);
  }
  Json q = algebra_to_json(*algebra_by_name("quantum_exterior(2/3)"));
  CHECK(q.dump().find("/2\"") != std::string::npos);
  CHECK(base_from_json(Json{{"Fp", 7}}) == BaseRing::prime_field(7));
  CHECK_THROWS(base_from_json("R"));
  Json bad = algebra_to_json(*truncated_poly(2));
  bad["mult"][0][1] = Json::array({"0", "0"});  // 1 * x = 0 breaks the unit law
  CHECK_THROWS(algebra_from_json(bad));
}

TEST_CASE("module JSON round trip") {
  auto A = cyclic_group_algebra(2, BaseRing::integers());
  Module M = augmentation_module(A, 4);
  Module N = module_from_json(Json::parse(module_to_json(M, A->name()).dump()), A);
  CHECK(N.gens == M.gens);
  CHECK(N.relations == M.relations);
  CHECK(N.action == M.action);

  auto T = truncated_poly(2);
  Json r = {{"algebra", "truncated_poly(2)"}, {"side", "right"}, {"generators", 1}, {"relations", Json::array()},
            {"action", {{"0", {{"1"}}}, {"1", {{"0"}}}}}};
  Module R = module_from_json(r, T);
  CHECK(R.algebra->name() != T->name());

  Json broken = r;
  broken["action"]["1"] = {{"1"}};  // x acting invertibly on a module over k[x]/x^2
  CHECK_THROWS(module_from_json(broken, T));

  const std::string path = "/tmp/gorlab_io_test_module.json";
  {
    std::ofstream out(path);
    out << module_to_json(module_by_name(T, "A"), "truncated_poly(2)").dump();
  }
  CHECK(load_module(T, path).gens == 2);
  std::remove(path.c_str());
}

TEST_CASE("report rendering") {
  ReportConfig cfg;
  cfg.lo = 0;
  cfg.hi = 1;
  RunReport r = report(truncated_poly(2), cfg);
  std::string a = dump_report(to_json(r)), b = dump_report(to_json(report(truncated_poly(2), cfg)));
  CHECK(a == b);
  Json j = Json::parse(a);
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["exit_code"] == 0);
  std::string text = render_text(r);
  CHECK(text.find("pass") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);

  ReportConfig only = config_from_json(Json{{"sections", {"gorenstein"}}});
  RunReport g = report(truncated_poly(2), only);
  CHECK(g.sections.size() == 1);
  CHECK_THROWS(config_from_json(Json{{"sections", {"nope"}}}));
}
