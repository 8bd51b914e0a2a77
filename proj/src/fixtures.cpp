#include "gorlab/fixtures.hpp"

#include "gorlab/gorenstein.hpp"

#include <regex>
#include <stdexcept>

namespace gorlab {

namespace {

BaseRing parse_base(const std::string& s) {
  if (s.empty() || s == "Q") return BaseRing::rationals();
  if (s == "Z") return BaseRing::integers();
  if (s.size() > 1 && (s[0] == 'F' || s[0] == 'f')) return BaseRing::prime_field(std::stol(s.substr(1)));
  throw std::invalid_argument("unknown base ring '" + s + "'");
}

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

}  // namespace

Module one_dim_module(AlgebraPtr A, const std::vector<Scalar>& eps, long m) {
  const BaseRing& R = A->base();
  if (eps.size() != A->rank()) throw std::invalid_argument("one_dim_module: one scalar per basis element");
  std::vector<Matrix> act;
  for (const auto& e : eps) {
    Matrix a(R, 1, 1);
    a.set(0, 0, e);
    act.push_back(a);
  }
  Matrix rel(R, 1, 0);
  if (m != 0) {
    if (!R.is_integers()) throw std::invalid_argument("one_dim_module: torsion needs integer base");
    rel = Matrix(R, 1, 1);
    rel(0, 0) = m;
  }
  Module M = make_module(std::move(A), 1, rel, std::move(act));
  if (auto p = check_module(M); !p.empty()) throw std::invalid_argument("one_dim_module: " + p.front());
  return M;
}

Module augmentation_module(AlgebraPtr A, long m) {
  if (!A->augmentation) throw std::invalid_argument("algebra " + A->name() + " has no augmentation");
  auto eps = *A->augmentation;
  return one_dim_module(std::move(A), eps, m);
}

Module vertex_simple(AlgebraPtr A, std::size_t n, std::size_t i) {
  if (A->rank() != n * (n + 1) / 2 || i >= n) throw std::invalid_argument("vertex_simple: bad vertex");
  std::vector<Scalar> eps(A->rank(), Scalar(0));
  eps[upper_triangular_index(n, i, i)] = 1;
  return one_dim_module(std::move(A), eps);
}

Module basis_quotient(AlgebraPtr A, std::size_t j) {
  if (j >= A->rank()) return regular_module(A);
  return cyclic_quotient(A, {A->basis_vector(j)});
}

AlgebraPtr algebra_by_name(const std::string& raw) {
  std::string name;
  for (char c : raw)
    if (c != ' ') name += c;
  std::smatch m;
  static const std::regex call(R"(^([a-z_0-9]+)(?:\((.*)\))?$)");
  if (!std::regex_match(name, m, call)) throw std::invalid_argument("cannot parse algebra name '" + raw + "'");
  const std::string head = m[1];
  const auto args = split_args(m[2]);
  auto arg = [&](std::size_t i) { return i < args.size() ? args[i] : std::string(); };
  if (head == "truncated_poly") return truncated_poly(std::stoul(arg(0)), parse_base(arg(1)));
  if (head == "upper_triangular") return upper_triangular(std::stoul(arg(0)), parse_base(arg(1)));
  if (head == "commutative_fat_point") return commutative_fat_point(parse_base(arg(0)));
  if (head == "quantum_exterior") {
    BaseRing R = parse_base(arg(1));
    return quantum_exterior(parse_scalar(arg(0), R), R);
  }
  if (head == "group_algebra") {
    BaseRing R = parse_base(arg(2));
    if (arg(0) == "cyclic") return cyclic_group_algebra(std::stoul(arg(1)), R);
    if (arg(0) == "symmetric" && arg(1) == "3") return symmetric3_group_algebra(R);
    throw std::invalid_argument("unsupported group in '" + raw + "'");
  }
  throw std::invalid_argument("unknown algebra preset '" + raw + "'");
}

Module module_by_name(const AlgebraPtr& A, const std::string& raw) {
  std::string name;
  for (char c : raw)
    if (c != ' ') name += c;
  if (auto plus = name.find('+'); plus != std::string::npos)
    return direct_sum(module_by_name(A, name.substr(0, plus)), module_by_name(A, name.substr(plus + 1)));
  std::smatch m;
  static const std::regex torsion(R"(^Z/\(?(\d+)\)?$)");
  static const std::regex simple(R"(^S(\d+)$)");
  static const std::regex power(R"(^A/\(?x\^?(\d*)\)?$)");
  if (name == "A") return regular_module(A);
  if (name == "k" || name == "triv" || (name == "Z" && A->base().is_integers())) return augmentation_module(A);
  if (name == "omega" || name == "D(A)") return dualizing_bimodule(A).left();
  if (name == "top") {
    if (!A->base().is_field()) throw std::invalid_argument("module_by_name: top needs a field base");
    return quotient(regular_module(A), radical_basis(*A)).module;
  }
  if (std::regex_match(name, m, torsion)) return augmentation_module(A, std::stol(m[1]));
  if (std::regex_match(name, m, simple)) {
    auto S = simple_modules(A);
    std::size_t i = std::stoul(m[1]);
    if (i >= S.size()) throw std::invalid_argument("module_by_name: only " + std::to_string(S.size()) + " simples");
    return S[i];
  }
  if (std::regex_match(name, m, power)) {
    std::string e = m[1];
    return basis_quotient(A, e.empty() ? 1 : std::stoul(e));
  }
  throw std::invalid_argument("unknown module name '" + raw + "'");
}

}  // namespace gorlab
