#pragma once

#include <memory>
#include <random>

#include "fdimlab/algebra.hpp"

namespace fdimlab {

enum class Tristate { Yes, No, Unknown };

// Finite-dimensional left module over an FDAlgebra: one action matrix per
// algebra basis element. The idempotent actions are commuting projectors
// summing to the identity; the cached dimension vector is their ranks.
class FDModule {
 public:
  enum class Verify { None, Basic, Auto, Full };

  FDModule(AlgebraPtr alg, std::vector<Mat> act, Verify level = Verify::Auto);
  static FDModule zero(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t dim() const { return dim_; }
  bool is_zero() const { return dim_ == 0; }
  const Mat& act(int i) const { return act_.at(i); }
  Mat act_of_vec(const Vec& a) const;
  const std::vector<std::size_t>& dim_vector() const { return dim_vector_; }

  // Full multiplication-table compatibility check; throws on violation.
  void verify_full() const;

  std::string dims_str() const;

 private:
  AlgebraPtr alg_;
  std::size_t dim_ = 0;
  std::vector<Mat> act_;
  std::vector<std::size_t> dim_vector_;

  void verify_basic() const;
};

using ModulePtr = std::shared_ptr<const FDModule>;

struct ModuleMap {
  ModulePtr src;
  ModulePtr tgt;
  Mat m;  // tgt.dim x src.dim

  bool is_intertwiner() const;  // checked on algebra generators
};

FDModule simple_module(AlgebraPtr a, int idem_ordinal);
FDModule projective_module(AlgebraPtr a, int idem_ordinal);

// P = (+) P_v^{mults[v]} with labeled coordinates, for cover bookkeeping.
struct ProjectiveSum {
  ModulePtr mod;
  std::vector<int> mults;
  struct Coord {
    int idem_ordinal;
    int copy;
    int alg_basis;  // basis element of the algebra carried by the coordinate
  };
  std::vector<Coord> coords;
  // Coordinate carrying e_v of (ordinal, copy):
  std::vector<std::vector<std::size_t>> generator_coord;
};
ProjectiveSum projective_sum(AlgebraPtr a, const std::vector<int>& mults);

FDModule direct_sum(const std::vector<const FDModule*>& parts);

// Submodule spanned by the columns of u (must be action-invariant).
FDModule submodule(const FDModule& m, const Mat& u, ModuleMap* inclusion = nullptr);
// Quotient by the column span of u.
FDModule quotient_module(const FDModule& m, const Mat& u, ModuleMap* projection = nullptr);

struct StructureParts {
  FDModule radical;
  ModuleMap radical_incl;
  FDModule top;
  ModuleMap top_proj;
  FDModule socle;
  ModuleMap socle_incl;
};
StructureParts structure_parts(const FDModule& m);

// Dimensions of rad^k M for k = 0,1,... down to zero.
std::vector<std::size_t> radical_series_dims(const FDModule& m);
std::vector<std::size_t> socle_series_dims(const FDModule& m);
int loewy_length(const FDModule& m);

struct Cover {
  ProjectiveSum p;
  Mat epi;        // m.dim x p.dim, surjective with kernel in rad P
  FDModule syzygy;
  Mat syz_incl;   // p.dim x syzygy.dim
};
Cover projective_cover(const FDModule& m);

// Basis of Hom_A(M, N) as matrices (intertwining on algebra generators,
// which suffices for valid modules).
std::vector<Mat> hom_space(const FDModule& m, const FDModule& n);

struct IsoResult {
  Tristate verdict = Tristate::Unknown;
  std::optional<Mat> intertwiner;
};
// Decides isomorphism: structural invariants first, then a search for an
// invertible element of the hom space. Over QQ a grid of size (dim+1)^h
// decides exactly (a nonzero det polynomial of total degree dim cannot
// vanish on it); over GF(p) the full p^h hom space is exhausted when it fits
// the budget. Outside those bounds the verdict is Unknown.
IsoResult is_isomorphic(const FDModule& m, const FDModule& n,
                        long budget = 1 << 16);

// Iso-invariant fingerprint: dim, dim vector, radical and socle series.
std::vector<std::size_t> fingerprint(const FDModule& m);

// Indecomposability via the endomorphism algebra: local <=> indecomposable.
// Over char 0 (or p > dim End) the radical comes from the trace form; a
// one-dimensional top certifies local. Splittings are searched through
// linear factors of minimal polynomials; over small GF(p) the endomorphism
// algebra is exhausted. Unknown is returned above the documented budgets.
Tristate is_indecomposable(const FDModule& m, long budget = 1 << 16);

struct Decomposition {
  std::vector<FDModule> parts;
  bool complete = true;  // false when a verdict was Unknown
};
Decomposition decompose(const FDModule& m, long budget = 1 << 16);

// Random module as the cokernel of a random map between projectives.
FDModule random_cokernel_module(AlgebraPtr a, std::mt19937_64& rng,
                                int max_copies = 2, int coeff_bound = 2);

// J (a subspace of A, closed under left multiplication, with J*J = 0 inside
// it) as a module over A/J.
FDModule subspace_as_quotient_module(const QuotientResult& qr, const Mat& carrier);

// Restriction of an A-module along the quotient map A -> A/J, i.e. the
// A/J-module structure on an A-module killed by J (verified).
FDModule as_quotient_module(const QuotientResult& qr, const FDModule& m);

}  // namespace fdimlab
