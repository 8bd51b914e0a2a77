#pragma once

#include "gorlab/duality_harness.hpp"

#include "json.hpp"

#include <string>

namespace gorlab {

using Json = nlohmann::json;

inline constexpr const char* kReportSchema = "gorlab.report/1";

Json to_json(const BaseRing& R);
BaseRing base_from_json(const Json& j);
Json to_json(const Matrix& m);  // list of rows of scalar strings
Matrix matrix_from_json(const Json& j, const BaseRing& R, std::size_t rows, std::size_t cols);

// {"base", "rank", "unit", "mult"} with mult[i][j] the coordinates of e_i e_j.
Json algebra_to_json(const FiniteAlgebra& A);
AlgebraPtr algebra_from_json(const Json& j, const std::string& name = "custom");
// A preset name or the path of an algebra JSON file.
AlgebraPtr load_algebra(const std::string& name_or_path);

// {"algebra", "side", "generators", "relations" (one coordinate list per relation), "action"}.
Json module_to_json(const Module& M, const std::string& algebra_ref, bool right = false);
// Right modules come back as left modules over the opposite algebra.
Module module_from_json(const Json& j, const AlgebraPtr& A);
// A module name (see module_by_name) or the path of a module JSON file over A.
Module load_module(const AlgebraPtr& A, const std::string& name_or_path);

Json to_json(const RInvariants& g);
Json to_json(const GradedGroups& g);
Json to_json(const FinitenessVerdict& v);
Json to_json(const GorensteinVerdict& v);
Json to_json(const SingularLocus& s);
Json to_json(const ChainComplex& X);  // {"degrees": [{"degree", "module", "differential"}]}
Json to_json(const GProjVerdict& v);
Json to_json(const ApproximationTriple& t);
Json to_json(const DualizingBimodule& w);
Json to_json(const OmegaHat& h);
Json to_json(const TateGroups& t);
Json to_json(const DualityReport& r);
Json to_json(const PairingReport& r);
Json to_json(const RunReport& r);

ReportConfig config_from_json(const Json& j);
std::string render_text(const RunReport& r);

// Pretty JSON with the schema field added to objects.
std::string dump_report(Json j);

}  // namespace gorlab
