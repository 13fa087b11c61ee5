#pragma once

#include "fdimlab/module.hpp"

namespace fdimlab {

// Outcome of a projective-dimension computation. Finite(n) certifies a zero
// (n+1)-st syzygy; InfiniteCertified carries indices 1 <= i < j with
// syzygy_j isomorphic to syzygy_i, which forces the minimal resolution to
// repeat forever; UnknownAtCap is the honest fallback.
struct PdResult {
  enum class Kind { Finite, InfiniteCertified, UnknownAtCap } kind =
      Kind::UnknownAtCap;
  int value = -1;   // Finite: the dimension
  int rep_i = -1;   // InfiniteCertified: earlier syzygy index
  int rep_j = -1;
  int cap = 0;

  static PdResult finite(int n) { return {Kind::Finite, n, -1, -1, 0}; }
  bool is_finite() const { return kind == Kind::Finite; }
  std::string str() const;
  // Total order helper: Finite(n) < Finite(m) for n < m; finite < unknown <
  // infinite (used for suprema with caveats handled by callers).
};

// Minimal projective resolution ... -> P_1 -> P_0 -> M -> 0, truncated at a
// step cap unless a zero syzygy ends it. Terms are recorded as multiplicity
// vectors over the primitive idempotents.
struct Resolution {
  ModulePtr module;
  std::vector<std::vector<int>> term_mults;  // per computed term
  std::vector<ProjectiveSum> terms;
  std::vector<Mat> diffs;   // diffs[i]: P_{i+1} -> P_i (matrix)
  Mat augmentation;         // P_0 -> M
  std::vector<FDModule> syzygies;  // syzygies[k] = Omega^{k+1}(M)
  bool minimal = true;
  bool truncated = false;   // cap reached with a nonzero last syzygy
  PdResult pd;              // as certified by this resolution

  int length() const { return static_cast<int>(term_mults.size()) - 1; }
};

int default_resolution_cap(const FDAlgebra& a);

// Iterated projective covers of successive syzygies; stops at a zero syzygy
// or at the cap. detect_periodicity compares each new syzygy with the
// earlier ones (up to isomorphism) to certify infinite projective dimension.
Resolution minimal_resolution(const FDModule& m, int cap,
                              bool detect_periodicity = true);

PdResult projective_dimension(const FDModule& m, int cap);
bool is_projective(const FDModule& m);

// dim Ext^i(M, S_j) as the multiplicity of P_j in term i of the minimal
// resolution. Throws when the resolution was truncated before step i.
int ext_dim(const Resolution& r, int simple_ordinal, int degree);

// The same dimension computed independently as cohomology of the complex
// Hom(P_*, S_j), with honest differentials.
int ext_dim_hom_complex(const Resolution& r, int simple_ordinal, int degree);

// Max over simples of pd; Infinite when any simple is certified infinite,
// Unknown when any is unknown (and none certified infinite).
PdResult global_dimension(AlgebraPtr a, int cap);

}  // namespace fdimlab
