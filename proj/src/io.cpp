#include "gorlab/io.hpp"

#include "gorlab/fixtures.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gorlab {

namespace {

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("'" + path + "': " + e.what());
  }
}

bool looks_like_file(const std::string& s) {
  return s.size() > 5 && s.substr(s.size() - 5) == ".json" && std::filesystem::exists(s);
}

Scalar scalar_from(const Json& j, const BaseRing& R) {
  if (j.is_string()) return parse_scalar(j.get<std::string>(), R);
  if (j.is_number_integer()) return R.from_int(j.get<long>());
  throw std::invalid_argument("scalar must be a string or an integer");
}

Json rows_of(const std::vector<std::pair<int, RInvariants>>& g) {
  Json out = Json::array();
  for (const auto& [d, inv] : g) out.push_back({{"degree", d}, {"group", to_json(inv)}});
  return out;
}

std::string site_name(const PrimeSite& s) { return s.to_string(); }

}  // namespace

Json to_json(const BaseRing& R) {
  if (R.kind() == RingKind::PrimeField) return Json{{"Fp", R.characteristic()}};
  return R.name();
}

BaseRing base_from_json(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "Q") return BaseRing::rationals();
    if (s == "Z") return BaseRing::integers();
    if (s.size() > 1 && s[0] == 'F') return BaseRing::prime_field(std::stol(s.substr(1)));
  } else if (j.is_object() && j.contains("Fp")) {
    return BaseRing::prime_field(j.at("Fp").get<long>());
  }
  throw std::invalid_argument("base must be \"Q\", \"Z\" or {\"Fp\": p}");
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_string(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Matrix matrix_from_json(const Json& j, const BaseRing& R, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw std::invalid_argument("matrix: expected " + std::to_string(rows) + " rows");
  Matrix m(R, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument("matrix: expected " + std::to_string(cols) + " columns");
    for (std::size_t c = 0; c < cols; ++c) m.set(i, c, scalar_from(j[i][c], R));
  }
  return m;
}

Json algebra_to_json(const FiniteAlgebra& A) {
  const std::size_t n = A.rank();
  Json unit = Json::array(), mult = Json::array();
  for (const auto& u : A.unit()) unit.push_back(scalar_to_string(u));
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      Json v = Json::array();
      for (std::size_t k = 0; k < n; ++k) v.push_back(scalar_to_string(A.c(i, j, k)));
      row.push_back(v);
    }
    mult.push_back(row);
  }
  return {{"base", to_json(A.base())}, {"rank", n}, {"unit", unit}, {"mult", mult}, {"name", A.name()}};
}

AlgebraPtr algebra_from_json(const Json& j, const std::string& name) {
  BaseRing R = base_from_json(j.at("base"));
  const std::size_t n = j.at("rank").get<std::size_t>();
  const Json& u = j.at("unit");
  const Json& m = j.at("mult");
  if (!u.is_array() || u.size() != n) throw std::invalid_argument("algebra: unit needs rank entries");
  if (!m.is_array() || m.size() != n) throw std::invalid_argument("algebra: mult must be rank x rank x rank");
  std::vector<Scalar> unit, mult;
  for (const auto& x : u) unit.push_back(scalar_from(x, R));
  for (std::size_t i = 0; i < n; ++i) {
    if (!m[i].is_array() || m[i].size() != n) throw std::invalid_argument("algebra: mult must be rank x rank x rank");
    for (std::size_t k = 0; k < n; ++k) {
      if (!m[i][k].is_array() || m[i][k].size() != n) throw std::invalid_argument("algebra: mult must be rank x rank x rank");
      for (const auto& x : m[i][k]) mult.push_back(scalar_from(x, R));
    }
  }
  FiniteAlgebra A(R, n, std::move(mult), std::move(unit), j.value("name", name));
  if (j.contains("augmentation")) {
    std::vector<Scalar> eps;
    for (const auto& x : j.at("augmentation")) eps.push_back(scalar_from(x, R));
    A.augmentation = eps;
  }
  if (j.contains("injdim_bound")) A.injdim_bound = j.at("injdim_bound").get<int>();
  return make_algebra(std::move(A));
}

AlgebraPtr load_algebra(const std::string& s) {
  if (looks_like_file(s)) return algebra_from_json(read_file(s), std::filesystem::path(s).stem().string());
  return algebra_by_name(s);
}

Json module_to_json(const Module& M, const std::string& algebra_ref, bool right) {
  Json rel = Json::array();
  for (std::size_t c = 0; c < M.relations.cols(); ++c) {
    Json v = Json::array();
    for (std::size_t r = 0; r < M.gens; ++r) v.push_back(scalar_to_string(M.relations(r, c)));
    rel.push_back(v);
  }
  Json act = Json::object();
  for (std::size_t i = 0; i < M.action.size(); ++i) act[std::to_string(i)] = to_json(M.action[i]);
  return {{"algebra", algebra_ref}, {"side", right ? "right" : "left"}, {"generators", M.gens}, {"relations", rel}, {"action", act}};
}

Module module_from_json(const Json& j, const AlgebraPtr& A0) {
  const std::string side = j.value("side", "left");
  if (side != "left" && side != "right") throw std::invalid_argument("module: side must be left or right");
  AlgebraPtr A = side == "right" ? opposite(A0) : A0;
  const BaseRing& R = A->base();
  const std::size_t g = j.at("generators").get<std::size_t>();
  const Json& rel = j.value("relations", Json::array());
  Matrix relations(R, g, rel.size());
  for (std::size_t c = 0; c < rel.size(); ++c) {
    if (!rel[c].is_array() || rel[c].size() != g) throw std::invalid_argument("module: each relation needs one entry per generator");
    for (std::size_t r = 0; r < g; ++r) relations.set(r, c, scalar_from(rel[c][r], R));
  }
  const Json& act = j.at("action");
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < A->rank(); ++i) {
    const std::string key = std::to_string(i);
    if (!act.contains(key)) throw std::invalid_argument("module: action of basis element " + key + " missing");
    action.push_back(matrix_from_json(act.at(key), R, g, g));
  }
  Module M = make_module(A, g, relations, action);
  if (auto p = check_module(M); !p.empty()) throw std::invalid_argument("module: " + p.front());
  return M;
}

Module load_module(const AlgebraPtr& A, const std::string& s) {
  if (looks_like_file(s)) return module_from_json(read_file(s), A);
  return module_by_name(A, s);
}

Json to_json(const RInvariants& g) {
  Json tors = Json::array();
  for (const auto& t : g.torsion) tors.push_back(t.get_str());
  return {{"free_rank", g.free_rank}, {"torsion", tors}, {"text", g.to_string()}};
}

Json to_json(const GradedGroups& g) { return {{"base", to_json(g.base)}, {"degrees", rows_of(g.groups)}}; }

Json to_json(const FinitenessVerdict& v) {
  Json j = {{"kind", to_string(v.kind)}, {"value", v.value}, {"text", v.to_string()}};
  if (v.kind == Finiteness::InfiniteCertified) {
    j["recurrence"] = {{"a", v.a}, {"b", v.b}, {"multiplicity", v.multiplicity}, {"pad_left", v.pad_left}, {"pad_right", v.pad_right}};
    j["obstruction"] = to_json(v.obstruction);
    j["certificate"] = v.certificate;
  }
  return j;
}

Json to_json(const GorensteinVerdict& v) {
  Json dims = Json::array(), ev = Json::array();
  for (const auto& d : v.dimensions) dims.push_back({{"site", site_name(d.site)}, {"left", d.left}, {"right", d.right}});
  for (const auto& e : v.evidence) ev.push_back({{"criterion", e.name}, {"outcome", e.outcome}, {"detail", e.detail}});
  Json j = {{"status", to_string(v.status)}, {"dimensions", dims}, {"evidence", ev}, {"depth", v.depth}};
  if (v.failing) j["failing"] = to_json(*v.failing);
  return j;
}

Json to_json(const SingularLocus& s) {
  Json cands = Json::array(), sing = Json::array();
  for (const auto& c : s.candidates) {
    Json simples = Json::array();
    for (const auto& v : c.simples) simples.push_back(to_json(v));
    cands.push_back({{"site", site_name(c.site)}, {"status", to_string(c.status)}, {"simples", simples}});
  }
  for (const auto& p : s.singular()) sing.push_back(site_name(p));
  return {{"candidates", cands}, {"singular", sing}, {"note", s.note}};
}

Json to_json(const ChainComplex& X) {
  Json deg = Json::array();
  for (int d = X.lo; d <= X.hi(); ++d) {
    Json t = {{"degree", d}, {"module", module_to_json(X.at(d), X.at(d).algebra ? X.at(d).algebra->name() : "")}};
    if (d < X.hi()) t["differential"] = to_json(X.d(d));
    deg.push_back(t);
  }
  return {{"degrees", deg}};
}

Json to_json(const GProjVerdict& v) {
  return {{"answer", to_string(v.answer)}, {"witness", v.witness}, {"checked", v.checked}, {"closure", v.closure}, {"detail", v.detail}};
}

Json to_json(const ApproximationTriple& t) {
  const std::string ref = t.target.algebra->name();
  return {{"target", module_to_json(t.target, ref)},
          {"gprojective_part", module_to_json(t.gprojective_part, ref)},
          {"finite_part", module_to_json(t.finite_part, ref)},
          {"epi", to_json(t.epi)},
          {"mono", to_json(t.mono)},
          {"steps", t.steps},
          {"cover_dropped", t.cover_dropped},
          {"exact", t.exact},
          {"x_verdict", to_json(t.x_verdict)},
          {"y_dimension", to_json(t.y_dimension)},
          {"certified", t.certified()}};
}

Json to_json(const DualizingBimodule& w) {
  const Bimodule& B = w.bimodule;
  Json left = Json::object(), right = Json::object();
  for (std::size_t i = 0; i < B.left->rank(); ++i) left[std::to_string(i)] = to_json(B.left_action(i));
  for (std::size_t i = 0; i < B.right->rank(); ++i) right[std::to_string(i)] = to_json(B.right_action(i));
  return {{"algebra", B.left->name()}, {"generators", B.module.gens}, {"left_action", left}, {"right_action", right},
          {"biduality_verified", w.biduality_verified}};
}

Json to_json(const OmegaHat& h) {
  Json terms = Json::array();
  for (std::size_t k = 0; k < h.terms.size(); ++k)
    terms.push_back({{"degree", -h.length + static_cast<int>(k)}, {"rank", invariants(h.terms[k].module).free_rank},
                     {"invariants", to_json(invariants(h.terms[k].module))}});
  return {{"length", h.length}, {"terms", terms}, {"complex", to_json(h.complex)},
          {"augmentation", to_json(h.augmentation)}, {"left", to_json(h.left)}, {"right", to_json(h.right)}};
}

Json to_json(const TateGroups& t) {
  Json j = to_json(t.groups);
  j["approximated"] = t.approximated;
  if (!t.note.empty()) j["note"] = t.note;
  return j;
}

Json to_json(const DualityReport& r) {
  auto rows = [](const std::vector<DegreeRow>& v) {
    Json out = Json::array();
    for (const auto& x : v)
      out.push_back({{"degree", x.degree}, {"lhs", to_json(x.lhs)}, {"rhs", to_json(x.rhs)}, {"comparable", x.comparable},
                     {"match", x.match}, {"note", x.note}});
    return out;
  };
  Json j = {{"kind", r.kind}, {"algebra", r.algebra}, {"modules", r.modules}, {"site", site_name(r.site)}, {"shift", r.shift},
            {"rows", rows(r.rows)}, {"notes", r.notes}, {"pass", r.pass()}};
  if (!r.alternate_rows.empty()) j["alternate_rows"] = rows(r.alternate_rows);
  return j;
}

Json to_json(const PairingReport& r) {
  return {{"modules", r.modules}, {"dim_mn", r.dim_mn}, {"dim_nsm", r.dim_nsm}, {"dim_msm", r.dim_msm},
          {"left_kernel", r.left_kernel}, {"right_kernel", r.right_kernel}, {"pass", r.pass()}};
}

Json to_json(const RunReport& r) {
  Json secs = Json::array(), dual = Json::array(), pair = Json::array();
  for (const auto& s : r.sections) secs.push_back({{"name", s.name}, {"status", s.status}, {"reason", s.reason}});
  for (const auto& d : r.duality) dual.push_back(to_json(d));
  for (const auto& p : r.pairings) pair.push_back(to_json(p));
  Json j = {{"algebra", r.algebra}, {"sections", secs}, {"duality", dual}, {"pairings", pair}, {"exit_code", r.exit_code()}};
  if (r.gorenstein) j["gorenstein"] = to_json(*r.gorenstein);
  if (r.singular) j["singular_locus"] = to_json(*r.singular);
  return j;
}

ReportConfig config_from_json(const Json& j) {
  ReportConfig c;
  if (j.contains("sections")) {
    c.gorenstein = c.singular_locus = c.duality = c.pairing = false;
    for (const auto& s : j.at("sections")) {
      const std::string n = s.get<std::string>();
      if (n == "gorenstein") c.gorenstein = true;
      else if (n == "singular_locus") c.singular_locus = true;
      else if (n == "duality") c.duality = true;
      else if (n == "pairing") c.pairing = true;
      else throw std::invalid_argument("config: unknown section '" + n + "'");
    }
  }
  c.depth = j.value("depth", c.depth);
  if (j.contains("range")) {
    c.lo = j.at("range").at(0).get<int>();
    c.hi = j.at("range").at(1).get<int>();
  }
  if (j.contains("modules")) c.modules = j.at("modules").get<std::vector<std::string>>();
  if (j.contains("primes")) c.primes = j.at("primes").get<std::vector<long>>();
  return c;
}

std::string render_text(const RunReport& r) {
  std::ostringstream os;
  os << "algebra " << r.algebra << "\n";
  if (r.gorenstein) {
    os << "gorenstein: " << to_string(r.gorenstein->status);
    for (const auto& d : r.gorenstein->dimensions) os << " [" << site_name(d.site) << ": " << d.left << "," << d.right << "]";
    os << "\n";
  }
  if (r.singular) {
    os << "singular locus: {";
    bool first = true;
    for (const auto& p : r.singular->singular()) {
      os << (first ? "" : ", ") << site_name(p);
      first = false;
    }
    os << "}\n";
  }
  for (const auto& d : r.duality) {
    os << d.kind << " duality at " << site_name(d.site) << " (shift " << d.shift << "): " << (d.pass() ? "pass" : "FAIL") << "\n";
    for (const auto& row : d.rows)
      os << "  " << row.degree << ": " << row.lhs.to_string() << " | " << row.rhs.to_string()
         << (row.comparable ? (row.match ? "" : "  mismatch") : "  not comparable") << "\n";
  }
  for (const auto& p : r.pairings)
    os << "pairing: dims " << p.dim_mn << "," << p.dim_nsm << "," << p.dim_msm << " kernels " << p.left_kernel << ","
       << p.right_kernel << ": " << (p.pass() ? "pass" : "FAIL") << "\n";
  for (const auto& s : r.sections) os << "[" << s.status << "] " << s.name << (s.reason.empty() ? "" : ": " + s.reason) << "\n";
  os << "exit " << r.exit_code() << "\n";
  return os.str();
}

std::string dump_report(Json j) {
  if (j.is_object()) j["schema"] = kReportSchema;
  return j.dump(2) + "\n";
}

}  // namespace gorlab
