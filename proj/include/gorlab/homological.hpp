#pragma once

#include "gorlab/hom.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gorlab {

// Cohomological complex: terms[k] sits in degree lo + k and diffs[k] maps degree lo + k to lo + k + 1.
// Terms are modules over a common algebra, or plain R-modules (null algebra).
struct ChainComplex {
  int lo = 0;
  std::vector<Module> terms;
  std::vector<Matrix> diffs;

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  bool empty() const { return terms.empty(); }
  bool in_window(int d) const { return d >= lo && d <= hi(); }
  const Module& at(int d) const { return terms.at(static_cast<std::size_t>(d - lo)); }
  const Matrix& d(int deg) const { return diffs.at(static_cast<std::size_t>(deg - lo)); }
};

// Problems with the complex (d o d != 0, differentials that are not module maps).
std::vector<std::string> check_complex(const ChainComplex& X);
// H^d; degrees outside the window count as zero modules.
RInvariants homology(const ChainComplex& X, int d);
bool exact_at(const ChainComplex& X, int d);
// Hom_A(X, N) as a complex of R-modules in degrees -hi..-lo (a cochain complex again).
ChainComplex hom_complex(const ChainComplex& X, const Module& N);

struct ProjectiveCover {
  Module projective;
  Matrix map;      // projective.gens -> M.gens, surjective
  bool minimal;    // verified: top(P) -> top(M) is bijective (field base)
  bool free;       // projective is A^r in standard coordinates
};
// Over a field base: minimal projective cover from primitive idempotents. Over Z: A^r with few generators.
ProjectiveCover projective_cover(const Module& M, const IdempotentDecomposition* idem = nullptr);

struct Resolution {
  Module module;                // M
  std::vector<Module> terms;    // P_0 .. P_n
  std::vector<Matrix> diffs;    // diffs[i]: P_{i+1} -> P_i
  Matrix augmentation;          // P_0 -> M
  std::vector<Module> syzygies; // syzygies[i] = Omega^i M, i = 0 .. n+1
  std::vector<Matrix> inclusions;  // inclusions[i]: Omega^{i+1} -> P_i
  std::vector<Matrix> covers;      // covers[i]: P_i -> Omega^i
  bool minimal = true;
  bool terminated = false;  // some syzygy vanished; all further terms are zero
  std::shared_ptr<const IdempotentDecomposition> idem;

  std::size_t length() const { return terms.size() - 1; }
  // Adds P_{n+1} and Omega^{n+2} (no-op once terminated).
  void extend();
  // P_i in degree -i, i = 0..length.
  ChainComplex complex() const;
};

Resolution projective_resolution(const Module& M, std::size_t length);
Module syzygy(const Module& M, std::size_t i);

// Degree-indexed invariants; degrees absent from the map were not computed.
struct GradedGroups {
  BaseRing base;
  std::vector<std::pair<int, RInvariants>> groups;  // sorted by degree

  const RInvariants* at(int d) const;
  std::string to_string() const;
};

GradedGroups ext(const Module& M, const Module& N, int n);
GradedGroups ext_from(const Resolution& res, const Module& N, int from, int to);
// L over opposite(A), M over A.
GradedGroups tor(const Module& L, const Module& M, int n);
GradedGroups tor_from(const Module& L, const Resolution& res, int from, int to);

enum class Finiteness { Finite, AtLeast, InfiniteCertified };
std::string to_string(Finiteness f);

struct FinitenessVerdict {
  Finiteness kind = Finiteness::AtLeast;
  int value = 0;  // d for Finite, the depth bound for AtLeast, a for InfiniteCertified
  // Recurrence data: Omega^b M is isomorphic to (Omega^a M)^multiplicity plus free_padding copies of A.
  int a = 0, b = 0, multiplicity = 0;
  int pad_left = 0, pad_right = 0;  // free summands added on the Omega^b / Omega^a side
  RInvariants obstruction;          // Ext^1(Omega^a M, Omega^{a+1} M), nonzero
  std::string certificate;
  std::string to_string() const;
};

// Section of the cover P_d -> Omega^d, proving Omega^d projective, when one exists.
std::optional<Matrix> splitting_section(const Resolution& res, std::size_t d);
FinitenessVerdict proj_dim(const Module& M, int depth = 12);
FinitenessVerdict proj_dim_of(const Resolution& res);
// Recompute a recurrence certificate from scratch.
bool reverify(const Module& M, const FinitenessVerdict& v);

std::pair<FinitenessVerdict, FinitenessVerdict> is_perfect_both_sides(const Bimodule& B, int depth = 12);

// Pairwise non-isomorphic simple modules (field base), as tops of A e for primitive idempotents e.
std::vector<Module> simple_modules(const AlgebraPtr& A);

// f: X^deg -> M vanishing on boundaries; true when the induced H^deg(X) -> M is bijective.
bool induces_iso_from(const ChainComplex& X, int deg, const Module& M, const Matrix& f);
// g: M -> X^deg landing in cycles; true when the induced M -> H^deg(X) is bijective.
bool induces_iso_into(const Module& M, const ChainComplex& X, int deg, const Matrix& g);

struct InjectiveResolution {
  Module module;
  ChainComplex complex;  // I^0 .. I^n in degrees 0..n
  Matrix coaugmentation; // M -> I^0
};
InjectiveResolution injective_resolution_artin(const Module& M, std::size_t length);

}  // namespace gorlab
