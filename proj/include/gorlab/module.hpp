#pragma once

#include "gorlab/algebra.hpp"
#include "gorlab/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gorlab {

// A finitely generated left module over `algebra`: the underlying R-module is
// R^gens / span(relations) and action[i] is the action of e_i on generators.
// Right A-modules are left modules over opposite(A); bimodules are left modules
// over enveloping(A). A null algebra means a plain R-module.
struct Module {
  BaseRing base;
  AlgebraPtr algebra;
  std::size_t gens = 0;
  Matrix relations;
  std::vector<Matrix> action;
  // Set when the module is literally A^r in standard coordinates (generator l*n+k is e_k in copy l).
  std::optional<std::size_t> free_rank;

  Matrix act(const Matrix& a) const;  // action of the algebra element with coordinates a
  bool has_relations() const { return relations.cols() > 0; }
};

Module make_module(AlgebraPtr A, std::size_t gens, Matrix relations, std::vector<Matrix> action);
Module plain_module(const BaseRing& base, std::size_t gens, Matrix relations);
Module zero_module(AlgebraPtr A);
Module free_module(AlgebraPtr A, std::size_t r);
Module regular_module(AlgebraPtr A);
// Same data seen over another (equal) algebra object.
Module with_algebra(const Module& M, AlgebraPtr A);

std::vector<std::string> check_module(const Module& M);
bool is_module_map(const Module& M, const Module& N, const Matrix& f);
// v (columns) lies in the relation span of N.
bool in_relation_span(const Module& N, const Matrix& v);
bool maps_equal(const Module& N, const Matrix& f, const Matrix& g);  // f == g modulo relations of N

RInvariants invariants(const Module& M);
bool is_zero(const Module& M);

// Normalized presentation: over a field no relations; over Z one diagonal
// relation d >= 2 per torsion generator. to_new: new <- old, to_old: old <- new.
struct Tidy {
  Module module;
  Matrix to_new, to_old;
};
Tidy tidy(const Module& M);

struct Submodule {
  Module module;
  Matrix inclusion;  // N.gens x module.gens
};
struct Quotient {
  Module module;
  Matrix projection;  // module.gens x N.gens
};

// Submodule of N generated (as R-module) by the columns of S; S must be A-stable.
Submodule r_submodule(const Module& N, const Matrix& S);
// Submodule of N generated as an A-module by the columns of S.
Submodule a_submodule(const Module& N, const Matrix& S);
Quotient quotient(const Module& N, const Matrix& S);  // N / A-span of S
Submodule kernel_of(const Module& M, const Module& N, const Matrix& f);
Quotient cokernel_of(const Module& N, const Matrix& f);
Submodule image_of(const Module& N, const Matrix& f);
bool is_injective_map(const Module& M, const Module& N, const Matrix& f);
bool is_surjective_map(const Module& N, const Matrix& f);

struct DirectSum {
  Module module;
  std::vector<Matrix> inclusions, projections;
};
DirectSum direct_sum(const std::vector<Module>& parts);
Module direct_sum(const Module& M, const Module& N);

// Quotient A / (A-ideal generated by the given elements) as a left module.
Module cyclic_quotient(AlgebraPtr A, const std::vector<Matrix>& elements);

// Restriction of scalars along the algebra map given by images of basis elements
// (each image is a coordinate column in the algebra of M).
Module restrict_scalars(const Module& M, AlgebraPtr B, const std::vector<Matrix>& images);

struct ModuleMap {
  Module source, target;
  Matrix matrix;
};

}  // namespace gorlab
