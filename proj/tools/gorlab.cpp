#include "gorlab/fixtures.hpp"
#include "gorlab/io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <regex>

using namespace gorlab;

namespace {

constexpr int kInputError = 3;

std::pair<int, int> parse_range(const std::string& s) {
  static const std::regex re(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw std::invalid_argument("range must look like a..b, got '" + s + "'");
  int lo = std::stoi(m[1]), hi = std::stoi(m[2]);
  if (lo > hi) throw std::invalid_argument("empty range '" + s + "'");
  return {lo, hi};
}

int emit(const Json& j) {
  std::cout << dump_report(j);
  return 0;
}

int duality_exit(const DualityReport& r) {
  for (const auto& row : r.rows)
    if (!row.comparable) return 2;
  return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact homological algebra over Gorenstein finite algebras"};
  app.require_subcommand(1);
  int depth = 12;
  app.add_option("--depth", depth, "Resolution depth bound")->check(CLI::Range(1, 64));

  std::string algebra, mod, mod2, range = "-2..2", config_path;
  bool hat = false, as_text = false, as_json = false;
  int d = 0;
  long prime = 0;

  auto* show = app.add_subcommand("algebra", "Print an algebra as JSON");
  show->add_option("algebra", algebra, "Preset name or JSON file")->required();

  auto* gor = app.add_subcommand("gorenstein", "Decide whether the algebra is Gorenstein");
  gor->add_option("algebra", algebra)->required();

  auto* omega = app.add_subcommand("omega", "Dualizing bimodule and its perfect replacement");
  omega->add_option("algebra", algebra)->required();
  omega->add_flag("--hat", hat, "Also build the bounded projective replacement");

  auto* tate = app.add_subcommand("tate", "Tate cohomology groups");
  tate->add_option("algebra", algebra)->required();
  tate->add_option("M", mod)->required();
  tate->add_option("N", mod2)->required();
  tate->add_option("--range", range, "Degrees a..b");

  auto* approx = app.add_subcommand("approx", "G-projective approximation");
  approx->add_option("algebra", algebra)->required();
  approx->add_option("module", mod)->required();

  auto* serre = app.add_subcommand("serre-op", "The Serre operator Omega^{1-d} GP(omega (x) M)");
  serre->add_option("algebra", algebra)->required();
  serre->add_option("module", mod)->required();
  serre->add_option("--d", d, "Krull dimension of the site")->check(CLI::IsMember({0, 1}));

  auto* sing = app.add_subcommand("singular-locus", "Sites where the algebra is not regular");
  sing->add_option("algebra", algebra)->required();

  auto* verify = app.add_subcommand("verify", "Check a duality theorem degree by degree");
  verify->require_subcommand(1);
  auto* vs = verify->add_subcommand("serre", "Serre duality over a field");
  auto* vl = verify->add_subcommand("local", "Local duality over the integers");
  for (auto* sc : {vs, vl}) {
    sc->add_option("algebra", algebra)->required();
    sc->add_option("M", mod)->required();
    sc->add_option("N", mod2)->required();
    sc->add_option("--range", range, "Degrees a..b");
  }
  vl->add_option("--prime", prime, "The prime p")->required();

  auto* rep = app.add_subcommand("report", "Run a configured set of checks");
  rep->add_option("algebra", algebra)->required();
  rep->add_option("--config", config_path, "Config JSON file");
  auto* fj = rep->add_flag("--json", as_json, "JSON output (default)");
  auto* ft = rep->add_flag("--text", as_text, "Text output");
  fj->excludes(ft);

  CLI11_PARSE(app, argc, argv);

  try {
    AlgebraPtr A = load_algebra(algebra);
    if (*show) return emit(algebra_to_json(*A));
    if (*gor) {
      GorensteinVerdict v = gorenstein_check(A, depth);
      emit(to_json(v));
      return v.status == GorensteinStatus::Inconclusive ? 2 : 0;
    }
    if (*omega) {
      Json j = {{"omega", to_json(dualizing_bimodule(A))}};
      if (hat) {
        try {
          j["omega_hat"] = to_json(omega_hat(A, depth));
        } catch (const PerfectionError& e) {
          j["omega_hat"] = {{"error", e.what()}, {"left", to_json(e.left)}, {"right", to_json(e.right)}};
          emit(j);
          return 1;
        }
      }
      return emit(j);
    }
    if (*tate) {
      auto [lo, hi] = parse_range(range);
      return emit(to_json(tate_ext(load_module(A, mod), load_module(A, mod2), lo, hi, depth)));
    }
    if (*approx) {
      ApproximationTriple t = gprojective_approximation(load_module(A, mod), depth);
      emit(to_json(t));
      return t.certified() ? 0 : 2;
    }
    if (*serre) return emit(module_to_json(serre_operator(load_module(A, mod), d, depth), A->name()));
    if (*sing) {
      SingularLocus s = singular_locus(A, depth);
      emit(to_json(s));
      for (const auto& c : s.candidates)
        if (c.status == SiteStatus::ProbablySingular) return 2;
      return 0;
    }
    if (*verify) {
      auto [lo, hi] = parse_range(range);
      Module M = load_module(A, mod), N = load_module(A, mod2);
      DualityReport r = *vs ? verify_serre_duality_field(M, N, lo, hi, depth) : verify_local_duality_integer(M, N, prime, lo, hi, depth);
      r.modules = {mod, mod2};
      emit(to_json(r));
      return duality_exit(r);
    }
    if (*rep) {
      ReportConfig cfg;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::invalid_argument("cannot open config '" + config_path + "'");
        cfg = config_from_json(Json::parse(in));
      }
      cfg.depth = app.get_option("--depth")->count() ? depth : cfg.depth;
      RunReport r = report(A, cfg);
      if (as_text)
        std::cout << render_text(r);
      else
        emit(to_json(r));
      return r.exit_code();
    }
  } catch (const std::exception& e) {
    std::cerr << "gorlab: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
