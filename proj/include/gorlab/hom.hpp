#pragma once

#include "gorlab/module.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gorlab {

// Hom_A(M, N) as a presented R-module with explicit generating maps.
class HomSpace {
public:
  HomSpace(const Module& M, const Module& N);

  const Module& source() const { return M_; }
  const Module& target() const { return N_; }
  const RInvariants& invariants() const { return inv_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<Matrix>& basis() const { return basis_; }  // N.gens x M.gens each
  const Matrix& relations() const { return rel_; }            // relations among basis maps

  // Coordinates of an A-linear map (column of length size()), or nullopt if f is not A-linear.
  std::optional<Matrix> coordinates(const Matrix& f) const;
  Matrix map_from(const Matrix& coeffs) const;
  // The presented R-module (no algebra).
  Module as_r_module() const;
  // Module structure from an action on maps: act(i, f) is the map e_i * f.
  Module as_module(AlgebraPtr B, const std::function<Matrix(std::size_t, const Matrix&)>& act) const;

private:
  Module M_, N_;
  Tidy tM_, tN_;
  bool fast_free_ = false;
  Matrix lattice_;                         // vec-coordinates (of tidy maps) spanning the solution space
  std::optional<LinearSolver> solver_;     // for lattice_
  Matrix to_new_;                          // presentation tidy transform
  std::vector<Matrix> basis_;
  Matrix rel_;
  RInvariants inv_;
};

// B is a right A-module given as a left module over opposite(A); M a left A-module.
// Generators of B (x) M are pairs s * M.gens + t before tidying.
struct TensorProduct {
  Module module;
  Matrix to_new;  // tidy transform from pair coordinates
  Matrix to_old;  // pair coordinates of the tidy generators
};
TensorProduct tensor_over(const Module& B, const Module& M, AlgebraPtr surviving = nullptr,
                          const std::vector<Matrix>* surviving_action = nullptr);

// Bimodules: left modules over tensor_product_algebra(L, op(R)).
struct Bimodule {
  AlgebraPtr left, right;  // left algebra and right algebra
  AlgebraPtr env;          // tensor_product_algebra(left, opposite(right))
  Module module;           // over env

  Module as_left() const;   // over left
  Module as_right() const;  // over opposite(right)
  Matrix left_action(std::size_t i) const;
  Matrix right_action(std::size_t j) const;
};

Bimodule make_bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t gens, Matrix relations,
                       const std::vector<Matrix>& left_action, const std::vector<Matrix>& right_action);
Bimodule bimodule_from_env(AlgebraPtr left, AlgebraPtr right, AlgebraPtr env, Module module);
Bimodule regular_bimodule(const AlgebraPtr& A);

// B (x)_A M for an A-bimodule B and left A-module M, with the left action of B.
TensorProduct tensor_bimodule(const Bimodule& B, const Module& M);

enum class IsoStatus { Found, CertifiedNonIsomorphic, NotFoundProbabilistic };
std::string to_string(IsoStatus s);

struct IsoResult {
  IsoStatus status;
  std::optional<Matrix> forward;   // M -> N
  std::optional<Matrix> backward;  // N -> M
  std::string reason;
  bool found() const { return status == IsoStatus::Found; }
};

IsoResult module_iso(const Module& M, const Module& N, std::uint64_t seed = 0x5eed);

// Hom_R(M, R) with the side swapped (a module over opposite(A)); rejects torsion over Z.
struct BaseDual {
  Module dual;
  Matrix biduality;  // M -> M** in generator coordinates
};
BaseDual dual_over_base(const Module& M);

// M* = Hom_A(M, A) as a module over opposite(A); generator k is basis map k of `space`.
struct AlgebraDual {
  Module dual;
  HomSpace space;
};
AlgebraDual dual_over_algebra(const Module& M);
// f: U -> V gives f*: V* -> U*.
Matrix dual_map(const AlgebraDual& U, const AlgebraDual& V, const Matrix& f);
// ev: M -> M** where Mdd = dual_over_algebra(Md.dual).
Matrix biduality_map(const AlgebraDual& Md, const AlgebraDual& Mdd);

}  // namespace gorlab
