#pragma once

#include "gorlab/homological.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gorlab {

enum class GAnswer { Yes, No, Inconclusive };
std::string to_string(GAnswer a);

struct GProjVerdict {
  GAnswer answer = GAnswer::Inconclusive;
  int witness = -1;     // i with Ext^i(M, A) != 0 (0 when M has torsion over Z)
  int checked = 0;      // Ext^i(M, A) = 0 verified for 1 <= i <= checked
  std::string closure;  // argument closing the tail beyond `checked`
  std::string detail;
  bool yes() const { return answer == GAnswer::Yes; }
};
GProjVerdict is_gprojective(const Module& M, int depth = 12);

// Window X^{-n} .. X^m of a totally acyclic complex of projectives with M = Coker(X^{-1} -> X^0).
struct CompleteResolution {
  Module module;
  ChainComplex window;
  Matrix augmentation;    // X^0 -> M
  Matrix coaugmentation;  // M -> X^1
  bool exact = false;            // interior degrees
  bool totally_acyclic = false;  // Hom(window, A) exact at interior degrees

  int n() const { return -window.lo; }
  int m() const { return window.hi(); }
  CompleteResolution widened(int n, int m) const;
};
// Throws std::invalid_argument unless is_gprojective(M) is Yes (skipped when `certified`).
CompleteResolution complete_resolution(const Module& M, int n, int m, int depth = 12, bool certified = false);

ChainComplex truncate(const ChainComplex& X, int lo, int hi);

// Ext-hat^i(M, N) for lo <= i <= hi; a non-G-projective M is replaced by its approximation (noted).
struct TateGroups {
  GradedGroups groups;
  bool approximated = false;
  std::string note;
};
TateGroups tate_ext(const Module& M, const Module& N, int lo, int hi, int depth = 12);

// Hom_A(M, N) modulo maps factoring through the chosen projective cover of N.
struct StableHom {
  HomSpace space;
  Matrix null;     // space coordinates of maps through the cover
  Module module;   // plain presented R-module
  Matrix to_new;   // space coordinates -> generators of `module`
  RInvariants invariants;
  std::vector<Matrix> representatives;  // maps M -> N, one per generator of `module`

  bool is_null(const Matrix& f) const;
  Matrix class_of(const Matrix& f) const;  // coordinates in `module`
};
StableHom stable_hom(const Module& M, const Module& N);
StableHom stable_hom_via(const Module& M, const Module& N, const Module& P, const Matrix& cover);

// Omega^i M for any integer i (negative i via the left half of the complete resolution).
Module stable_syzygy(const Module& M, int i, int depth = 12);

// M + A^a = N + A^b for small a, b, or both projective. Arguments should be G-projective.
bool stably_isomorphic(const Module& M, const Module& N);

struct AcyclicityReport {
  std::vector<int> exact_failures;  // interior degrees of X with homology
  std::vector<int> hom_failures;    // degrees j of X where Hom(X, A) has cohomology at Hom(X^j, A)
  // Failures at degrees j with j + d + 1 <= hi, where an injective dimension d of A forces vanishing.
  std::vector<int> forced_failures;
  bool pass() const { return exact_failures.empty() && hom_failures.empty(); }
  std::string to_string() const;
};
AcyclicityReport total_acyclicity_probe(const ChainComplex& X, std::optional<int> injdim = std::nullopt);

// X^{-L} .. X^0 from a projective resolution of M; with `zero_cap` a zero term is added in degree 1.
ChainComplex resolution_window(const Module& M, int L, bool zero_cap = false);

}  // namespace gorlab
