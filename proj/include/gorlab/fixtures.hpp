#pragma once

#include "gorlab/module.hpp"

#include <string>
#include <vector>

namespace gorlab {

// Rank-one module R (or R/m when m >= 2) on which e_i acts by eps[i].
Module one_dim_module(AlgebraPtr A, const std::vector<Scalar>& eps, long m = 0);
// The module given by the algebra's augmentation (k for local presets, the trivial module for group algebras).
Module augmentation_module(AlgebraPtr A, long m = 0);
// Simple module at vertex i of upper_triangular(n): E_ii acts by 1, everything else by 0.
Module vertex_simple(AlgebraPtr A, std::size_t n, std::size_t i);
// A / (A e_j) for the basis element e_j (for truncated_poly this is A/(x^j)).
Module basis_quotient(AlgebraPtr A, std::size_t j);

// Resolve names like "truncated_poly(3)", "group_algebra(cyclic,6,Z)", "upper_triangular(2)",
// "quantum_exterior(2,F5)", "commutative_fat_point".
AlgebraPtr algebra_by_name(const std::string& name);

// Resolve module names over A: "A", "k" (or "Z", "triv"), "Z/m", "top", "S<i>", "A/x^j", "omega", and sums "M+N".
Module module_by_name(const AlgebraPtr& A, const std::string& name);


}  // namespace gorlab
