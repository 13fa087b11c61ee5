#pragma once

#include "fdimlab/findim.hpp"
#include "fdimlab/functors.hpp"

namespace fdimlab {

// Parse -> Groebner -> normal basis -> structure constants, bundled.
struct AlgebraPipeline {
  std::shared_ptr<const PathAlgebraPresentation> pres;
  std::shared_ptr<const GroebnerBasis> gb;
  std::shared_ptr<const NormalBasis> nb;
  AlgebraPtr alg;

  int vertex_ordinal(const std::string& name) const;
  // Normal-form coordinates of a parsed expression.
  Vec element_vec(const std::string& expr) const;
};

struct PipelineOptions {
  int degree_cap = -1;  // -1: default from the relations
  std::vector<std::string> precedence;
  std::optional<Field> field_override;
};

PathAlgebraPresentation with_field(const PathAlgebraPresentation& p, const Field& f);
AlgebraPipeline build_pipeline(const PathAlgebraPresentation& pres,
                               const PipelineOptions& opts = {});

// ---------------------------------------------------------------------------
// Loewy-length-style invariants of the Ext algebra.

// ell = 1 + max{ i : Ext^i(S_e, S_e) != 0 }; requires pd S_e finite.
int ext_loewy_length(AlgebraPtr a, int idem_ordinal, int resolution_cap = -1);

struct UniformLL {
  bool uniform = false;
  int ell = 0;
  int bad_a = -1, bad_b = -1;  // offending pair of summands when not uniform
  std::vector<int> per_summand;
};
// Per primitive summand S of S_e: m(S) = max{ i : Ext^i(S, S_e) != 0 };
// uniform when all agree, in which case ell = m + 1.
UniformLL uniform_graded_loewy_length(AlgebraPtr a, const std::vector<int>& ordinals,
                                      int resolution_cap = -1);

// ---------------------------------------------------------------------------
// Bound reports.

struct Quantity {
  std::string name;
  std::string value;
  bool exact = false;
};

struct BoundReport {
  std::string statement;
  std::vector<std::pair<std::string, bool>> hypotheses;
  bool hypotheses_ok = true;
  std::vector<Quantity> quantities;
  std::string inequality;
  bool holds = false;
  bool conclusive = true;  // a violation would be a genuine counterexample
  bool degenerate = false;
  std::vector<std::string> notes;
  std::vector<std::string> witnesses;
};

struct CheckOptions {
  int dim_cap = 6;
  std::uint64_t seed = 1;
  int samples = 24;
  int resolution_cap = -1;
  int degree_cap = -1;
  std::optional<Field> search_field;  // field for exhaustive corner searches
  std::vector<std::pair<std::string, FDModule>> curated;  // optional witnesses
};

// findim Lambda as a quantity: exact via finite gl.dim when available, else
// the requested bounded search marked as a lower bound.
FindimEstimate measure_findim(AlgebraPtr a, const CheckOptions& opts,
                              FindimMode mode);

BoundReport check_theorem24(const AlgebraPipeline& lam, int idem_ordinal,
                            const CheckOptions& opts);
BoundReport check_prop31(const AlgebraPipeline& lam, int idem_ordinal,
                         const CheckOptions& opts);
BoundReport check_prop35(const AlgebraPipeline& lam, const QuiverElement& x,
                         const CheckOptions& opts);
BoundReport check_prop38(const AlgebraPipeline& lam, const QuiverElement& x,
                         const CheckOptions& opts);
BoundReport check_prop310(const AlgebraPipeline& lam,
                          const std::vector<std::string>& gen_exprs,
                          const CheckOptions& opts);

// The two-sided ideal generated by a vertex or arrow, as a subspace.
IdealModule two_sided_ideal(const AlgebraPipeline& p, const QuiverElement& x);
// A's left regular module.
FDModule regular_module(AlgebraPtr a);

// ---------------------------------------------------------------------------
// Quiver surgeries.

struct ArrowSplitResult {
  PathAlgebraPresentation pres;
  std::string new_vertex;
  std::string arrow1, arrow2;  // alpha1: s -> u, alpha2: u -> t
  std::string split_arrow;
};
// Removes alpha: s -> t, adds u with alpha1: s -> u, alpha2: u -> t, and
// substitutes alpha2*alpha1 for alpha in every relation.
ArrowSplitResult arrow_split(const PathAlgebraPresentation& pres,
                             const std::string& arrow_name);

struct AlmostVanishingResult {
  PathAlgebraPresentation pres;
  std::string new_vertex;                 // x
  std::string alpha;                      // v -> x
  std::vector<std::string> betas;         // x -> t(r_i)
  std::vector<AlgebraElement> minimal_gens;  // the r_i actually used
  int source_vertex_ordinal = -1;         // v
};
// The new-quiver construction for an almost vanishing left ideal J = Je,
// J rad = 0, J inside the radical; gens are expressions over the original
// presentation.
AlmostVanishingResult almost_vanishing_construction(
    const AlgebraPipeline& lam, const std::vector<std::string>& gen_exprs,
    const PipelineOptions& opts = {});

// Mechanical check of the surgery conclusions: Be_xB projective as a left
// B-module, and B/Be_xB isomorphic to Lambda/J under the path-word
// correspondence.
struct SurgeryCheck {
  bool ideal_projective_left = false;
  bool quotient_iso = false;
  int dim_b = 0;
  int dim_ideal = 0;
  int dim_quotient = 0;
  int dim_lambda_quotient = 0;
  std::string detail;
};
SurgeryCheck check_corner_surgery(const AlgebraPipeline& lam,
                                  const std::vector<Vec>& j_gens,
                                  const AlgebraPipeline& b,
                                  const std::string& new_vertex);

// ---------------------------------------------------------------------------
// Socle-ideal scan (max-Loewy-length projectives and their simple socles).

struct SocleCandidate {
  int proj_ordinal = -1;    // the projective Lambda e_v scanned
  int socle_vertex = -1;    // vertex of the simple found in its socle
  Vec element;              // spanning element, as an algebra vector
  std::string element_str;
  bool two_sided = false;
  bool in_radical = false;
  bool right_annihilates_radical = false;
  bool degenerate_source_case = false;
  std::optional<BoundReport> prop310;
};
std::vector<SocleCandidate> socle_ideal_candidates(const AlgebraPipeline& lam,
                                                   const CheckOptions& opts);

}  // namespace fdimlab
