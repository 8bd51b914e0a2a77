#include "gorlab/fixtures.hpp"
#include "gorlab/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gorlab;

namespace {

std::pair<int, int> range_of(const std::pair<int, int>& r) {
  if (r.first > r.second) throw std::invalid_argument("empty range");
  return r;
}

}  // namespace

PYBIND11_MODULE(_gorlab, m) {
  m.doc() = "Exact homological algebra over Gorenstein finite algebras";

  py::register_exception<PerfectionError>(m, "PerfectionError", PyExc_RuntimeError);

  py::class_<FiniteAlgebra, std::shared_ptr<FiniteAlgebra>>(m, "Algebra")
      .def_property_readonly("name", &FiniteAlgebra::name)
      .def_property_readonly("rank", &FiniteAlgebra::rank)
      .def_property_readonly("base", [](const FiniteAlgebra& A) { return A.base().name(); })
      .def("to_json", [](const FiniteAlgebra& A) { return algebra_to_json(A).dump(); })
      .def("__repr__", [](const FiniteAlgebra& A) { return "<Algebra " + A.name() + " over " + A.base().name() + ">"; });

  py::class_<Module>(m, "Module")
      .def_readonly("generators", &Module::gens)
      .def_property_readonly("invariants", [](const Module& M) { return invariants(M).to_string(); })
      .def("to_json", [](const Module& M) { return module_to_json(M, M.algebra->name()).dump(); })
      .def("__repr__", [](const Module& M) {
        return "<Module over " + M.algebra->name() + ", " + std::to_string(M.gens) + " generators>";
      });

  auto shared = [](const AlgebraPtr& A) { return std::const_pointer_cast<FiniteAlgebra>(A); };

  m.def("algebra", [shared](const std::string& name) { return shared(load_algebra(name)); }, py::arg("name"),
        "Preset name or algebra JSON file");
  m.def("algebra_from_json", [shared](const std::string& text) { return shared(algebra_from_json(Json::parse(text))); });
  m.def("module", [](const std::shared_ptr<FiniteAlgebra>& A, const std::string& name) { return load_module(A, name); },
        py::arg("algebra"), py::arg("name"));
  m.def("module_from_json", [](const std::shared_ptr<FiniteAlgebra>& A, const std::string& text) {
    return module_from_json(Json::parse(text), A);
  });

  m.def("gorenstein_check", [](const std::shared_ptr<FiniteAlgebra>& A, int depth) { return to_json(gorenstein_check(A, depth)).dump(); },
        py::arg("algebra"), py::arg("depth") = 12);
  m.def("singular_locus", [](const std::shared_ptr<FiniteAlgebra>& A, int depth) { return to_json(singular_locus(A, depth)).dump(); },
        py::arg("algebra"), py::arg("depth") = 12);
  m.def("omega", [](const std::shared_ptr<FiniteAlgebra>& A) { return to_json(dualizing_bimodule(A)).dump(); });
  m.def("omega_hat", [](const std::shared_ptr<FiniteAlgebra>& A, int depth) { return to_json(omega_hat(A, depth)).dump(); },
        py::arg("algebra"), py::arg("depth") = 12);
  m.def("is_gprojective", [](const Module& M, int depth) { return to_json(is_gprojective(M, depth)).dump(); },
        py::arg("module"), py::arg("depth") = 12);
  m.def("tate_ext",
        [](const Module& M, const Module& N, std::pair<int, int> r, int depth) {
          auto [lo, hi] = range_of(r);
          return to_json(tate_ext(M, N, lo, hi, depth)).dump();
        },
        py::arg("M"), py::arg("N"), py::arg("range"), py::arg("depth") = 12);
  m.def("gprojective_approximation", [](const Module& M, int depth) { return to_json(gprojective_approximation(M, depth)).dump(); },
        py::arg("module"), py::arg("depth") = 12);
  m.def("serre_operator", &serre_operator, py::arg("module"), py::arg("d"), py::arg("depth") = 12);
  m.def("verify_serre_duality_field",
        [](const Module& M, const Module& N, std::pair<int, int> r, int depth) {
          auto [lo, hi] = range_of(r);
          return to_json(verify_serre_duality_field(M, N, lo, hi, depth)).dump();
        },
        py::arg("M"), py::arg("N"), py::arg("range"), py::arg("depth") = 12);
  m.def("verify_local_duality_integer",
        [](const Module& M, const Module& N, long p, std::pair<int, int> r, int depth) {
          auto [lo, hi] = range_of(r);
          return to_json(verify_local_duality_integer(M, N, p, lo, hi, depth)).dump();
        },
        py::arg("M"), py::arg("N"), py::arg("p"), py::arg("range"), py::arg("depth") = 12);
  m.def("trace_pairing_probe", [](const Module& M, const Module& N, int depth) { return to_json(trace_pairing_probe(M, N, depth)).dump(); },
        py::arg("M"), py::arg("N"), py::arg("depth") = 12);
  m.def("report",
        [](const std::shared_ptr<FiniteAlgebra>& A, const std::string& config) {
          ReportConfig cfg = config.empty() ? ReportConfig{} : config_from_json(Json::parse(config));
          return dump_report(to_json(report(A, cfg)));
        },
        py::arg("algebra"), py::arg("config") = "");
}
