#pragma once

#include <memory>
#include <optional>

#include "fdimlab/presentation.hpp"

namespace fdimlab {

// Raised by normal_basis when normal paths survive at the degree cap: either
// the ideal is not admissible or the cap is too low.
class NotFiniteDimensionalAtCap : public std::runtime_error {
 public:
  NotFiniteDimensionalAtCap(int cap, int surviving)
      : std::runtime_error("normal paths survive at the degree cap " +
                           std::to_string(cap) + " (" +
                           std::to_string(surviving) +
                           " of them); not admissible or cap too low"),
        cap(cap), surviving(surviving) {}
  int cap;
  int surviving;
};

// Truncated completion output: monic uniform elements, pairwise tip-reduced,
// with every ideal generator reducing to zero against them.
struct GroebnerBasis {
  std::shared_ptr<const PathAlgebraPresentation> presentation;
  AdmissibleOrder order;
  std::vector<AlgebraElement> elements;
  int degree_cap = 0;
  bool complete_below_cap = false;
  int completion_passes = 0;
  int discarded_above_cap = 0;

  std::vector<Path> tips() const;
};

// The order-maximal path of x; throws on x = 0.
Path tip(const AlgebraElement& x, const AdmissibleOrder& ord);
Scalar tip_coefficient(const AlgebraElement& x, const AdmissibleOrder& ord);

// Normal form of x against a list of monic elements: no path of the result
// has a subword equal to a basis tip; congruent to x modulo the ideal the
// basis generates.
AlgebraElement reduce(const Quiver& q, const AlgebraElement& x,
                      const std::vector<AlgebraElement>& basis,
                      const AdmissibleOrder& ord);

// All overlap relations x*m - n*y with m, n nontrivial paths,
// len(m) < len(tip(y)) and tip(x)*m = n*tip(y). Inputs must be monic.
std::vector<AlgebraElement> overlap_relations(const Quiver& q,
                                              const AlgebraElement& x,
                                              const AlgebraElement& y,
                                              const AdmissibleOrder& ord);

// Overlap completion, discarding elements whose tips exceed degree_cap;
// complete_below_cap is set when a full pass adds nothing of tip length
// <= degree_cap.
GroebnerBasis groebner_basis(std::shared_ptr<const PathAlgebraPresentation> pres,
                             const AdmissibleOrder& ord, int degree_cap);

int default_degree_cap(const PathAlgebraPresentation& pres);

// The monomial basis N of kQ/I: paths none of whose subwords is a basis tip,
// enumerated by length until a length with no normal path certifies
// completeness.
struct NormalBasis {
  std::shared_ptr<const GroebnerBasis> gb;
  std::vector<Path> paths;               // sorted by (length, order)
  std::map<Path, int> index;
  std::vector<int> count_by_length;      // counts per length 0..L-1
  int termination_length = 0;            // least L with no normal path

  const Quiver& quiver() const { return gb->presentation->quiver; }
  const Field& field() const { return gb->presentation->field; }
  int dim() const { return static_cast<int>(paths.size()); }
  std::vector<int> paths_with_source(int v) const;
  std::vector<int> paths_with_target(int v) const;
  // Index of a normal path; nullopt when p is not normal.
  std::optional<int> find(const Path& p) const;

  // Normal-form coordinates of an element over the normal basis.
  std::vector<Scalar> coordinates(const AlgebraElement& x) const;
};

NormalBasis normal_basis(std::shared_ptr<const GroebnerBasis> gb);

struct AvoidanceReport {
  bool relations_avoid_x = false;
  bool basis_closed = false;
  bool gb_avoids_x = false;  // meaningful when relations_avoid_x holds
  std::optional<Path> counterexample;
};

// Mechanical check of the avoidance analysis at x: do the input relations
// avoid x, and is the normal basis closed under p1*x*p2?  When the relations
// avoid x, also asserts that every completed basis element avoids x and
// reports a counterexample path on any failure.
AvoidanceReport avoidance_report(const PathAlgebraPresentation& pres,
                                 const QuiverElement& x, const GroebnerBasis& gb,
                                 const NormalBasis& nb);

}  // namespace fdimlab
