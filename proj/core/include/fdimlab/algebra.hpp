#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fdimlab/groebner.hpp"
#include "fdimlab/linalg.hpp"

namespace fdimlab {

using Vec = std::vector<Scalar>;

// Finite-dimensional basic algebra given by structure constants over an
// ordered basis, together with a complete set of primitive orthogonal
// idempotents. Constructor invariant kept by every factory in this module:
// the idempotents are basis elements, every other basis element lies in the
// radical, and e_t(b) * b * e_s(b) = b for all basis elements b.
class FDAlgebra {
 public:
  struct Data {
    Field field;
    std::vector<std::string> labels;
    // product[i*dim+j] = coordinates of b_i * b_j (sparse).
    std::vector<std::vector<std::pair<int, Scalar>>> table;
    std::vector<int> idempotents;  // basis indices, in idempotent order
    std::vector<int> src_idem;     // per basis element: idempotent ordinal
    std::vector<int> tgt_idem;
    std::vector<std::string> idem_names;  // display names (vertex names)
    std::string name;
    std::shared_ptr<const NormalBasis> normal_basis_link;
  };

  explicit FDAlgebra(Data d);

  const Field& field() const { return d_.field; }
  std::size_t dim() const { return d_.labels.size(); }
  const std::string& label(int i) const { return d_.labels.at(i); }
  const std::string& name() const { return d_.name; }
  int idempotent_count() const { return static_cast<int>(d_.idempotents.size()); }
  int idempotent_basis_index(int ordinal) const { return d_.idempotents.at(ordinal); }
  const std::string& idempotent_name(int ordinal) const { return d_.idem_names.at(ordinal); }
  std::optional<int> idempotent_ordinal_by_name(const std::string& n) const;
  int src_idem(int i) const { return d_.src_idem.at(i); }
  int tgt_idem(int i) const { return d_.tgt_idem.at(i); }
  bool is_idempotent_element(int i) const;
  const std::shared_ptr<const NormalBasis>& normal_basis_link() const {
    return d_.normal_basis_link;
  }

  const std::vector<std::pair<int, Scalar>>& product(int i, int j) const {
    return d_.table[i * dim() + j];
  }
  Vec mul(const Vec& a, const Vec& b) const;
  Vec mul_basis(int i, int j) const;
  Vec basis_vec(int i) const { return unit_vector(field(), dim(), i); }
  Vec unit() const;
  Mat left_mul_matrix(int i) const;   // v -> b_i * v
  Mat right_mul_matrix(int i) const;  // v -> v * b_i
  std::vector<int> radical_basis() const;  // non-idempotent basis indices

  // Minimal multiplicative generator data: radical basis elements spanning
  // rad/rad^2, plus an expression of every basis element as a linear
  // combination of words in those generators (idempotents stand alone).
  struct Generators {
    std::vector<int> gens;  // basis indices
    struct Term {
      Scalar coeff;
      std::vector<int> word;  // generator ordinals, product left-to-right
    };
    struct Expr {
      bool is_idempotent = false;
      int idem_ordinal = -1;
      std::vector<Term> terms;
    };
    std::vector<Expr> exprs;  // per basis element
  };
  const Generators& generators() const;

  std::string describe() const;

 private:
  Data d_;
  mutable std::shared_ptr<const Generators> gens_cache_;

  void validate() const;
};

using AlgebraPtr = std::shared_ptr<const FDAlgebra>;

// Structure constants of kQ/I over the normal basis; idempotents are the
// trivial paths.
AlgebraPtr build_algebra(std::shared_ptr<const NormalBasis> nb);

// Corner algebra (1-e)A(1-e) for e the sum of the listed primitive
// idempotents (given by ordinals). Removing nothing returns A itself;
// removing everything yields the zero algebra; both get a warning.
struct CornerReduction {
  AlgebraPtr big;
  AlgebraPtr corner;
  std::vector<int> embed;       // corner basis index -> big basis index
  std::vector<int> kept_idems;  // big idempotent ordinals kept, in order
  std::vector<int> removed_idems;
  std::string warning;

  // Corner coordinates of the (1-e)..(1-e) truncation of a big vector.
  Vec restrict_vec(const Vec& big_v) const;
  Vec embed_vec(const Vec& corner_v) const;
};
CornerReduction idempotent_reduction(AlgebraPtr a, const std::vector<int>& removed_ordinals);

// Subspace of A closed under left multiplication (and optionally right
// multiplication), with the closure certificates re-verified exactly.
struct IdealModule {
  Mat carrier;  // dim(A) x dim(J), columns form a basis of J
  bool left_closed = false;
  bool two_sided = false;
};
IdealModule ideal_closure(const FDAlgebra& a, const std::vector<Vec>& gens,
                          bool close_two_sided);

// A / (two-sided ideal generated by gens). The quotient basis is the first
// spanning subset of A's basis modulo J (idempotents first by basis order),
// so surviving primitive idempotents stay primitive idempotents.
struct QuotientResult {
  AlgebraPtr big;
  AlgebraPtr quotient;
  IdealModule ideal;
  std::vector<int> kept;  // quotient basis index -> big basis index
  std::string warning;

  Vec project_vec(const Vec& big_v) const;  // coordinates mod J
};
QuotientResult quotient_by_ideal(AlgebraPtr a, const std::vector<Vec>& gens);

AlgebraPtr opposite_algebra(AlgebraPtr a);

// One-vertex-per-simple semisimple algebra k^n (used for degenerate fixtures).
AlgebraPtr semisimple_algebra(const Field& f, const std::vector<std::string>& names);

}  // namespace fdimlab
