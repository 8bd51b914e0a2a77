#pragma once

#include "gorlab/stable_tate.hpp"

#include <string>

namespace gorlab {

// 0 -> Y -> X -> M -> 0 with X G-projective and Y of finite projective dimension.
struct ApproximationTriple {
  Module target;
  Module gprojective_part;  // X_M
  Module finite_part;       // Y_M
  Matrix epi;               // X_M -> M
  Matrix mono;              // Y_M -> X_M
  int steps = 0;            // n with Omega^n M G-projective
  bool cover_dropped = false;  // the P_0 summand was not needed
  bool exact = false;
  GProjVerdict x_verdict;
  FinitenessVerdict y_dimension;
  bool certified() const;
};
ApproximationTriple gprojective_approximation(const Module& M, int depth = 12);

// 0 -> M -> Y^M -> X^M -> 0 with Y^M G-injective and X^M of finite injective dimension (field base).
struct CoapproximationTriple {
  Module target;
  Module ginjective_part;  // Y^M
  Module finite_part;      // X^M
  Matrix mono;             // M -> Y^M
  Matrix epi;              // Y^M -> X^M
  bool exact = false;
  ApproximationTriple dual;  // the approximation of D(M) over the opposite algebra
};
CoapproximationTriple ginjective_approximation_artin(const Module& M, int depth = 12);

// Omega^{1-d} GP(omega (x) M).
Module serre_operator(const Module& M, int d, int depth = 12);

struct NakayamaSquareReport {
  bool y_projective = false;  // Y-part of the approximation of omega (x) M is projective
  bool round_trip = false;    // GP(Hom(omega, GP(omega (x) M))) stably isomorphic to M
  std::string detail;
  bool pass() const { return y_projective && round_trip; }
};
NakayamaSquareReport verify_nakayama_square(const Module& M, int depth = 12);

}  // namespace gorlab
