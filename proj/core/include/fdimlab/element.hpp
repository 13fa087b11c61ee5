#pragma once

#include <map>
#include <vector>

#include "fdimlab/linalg.hpp"
#include "fdimlab/quiver.hpp"

namespace fdimlab {

// Length-left-lexicographic admissible order on paths: shorter paths first,
// ties broken lexicographically on the written word by arrow precedence.
// Prepending or appending a fixed word preserves the comparison of
// equal-length words, which is exactly the multiplicativity an admissible
// order needs; every proper subpath is shorter, hence smaller.
class AdmissibleOrder {
 public:
  static AdmissibleOrder declaration_order(const Quiver& q);
  // Precedence list = all arrow names, smallest first.
  static AdmissibleOrder from_precedence(const Quiver& q,
                                         const std::vector<std::string>& names);

  std::strong_ordering compare(const Path& p, const Path& q) const;
  bool less(const Path& p, const Path& q) const { return compare(p, q) < 0; }
  const std::vector<int>& ranks() const { return rank_; }

 private:
  std::vector<int> rank_;  // rank_[arrow] = precedence position
};

// Finite k-linear combination of paths; zero coefficients are never stored.
class AlgebraElement {
 public:
  explicit AlgebraElement(const Field& f) : field_(f) {}
  static AlgebraElement from_path(const Field& f, const Path& p,
                                  const Scalar& c);

  const Field& field() const { return field_; }
  const std::map<Path, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Path& p, const Scalar& c);
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement scaled(const Scalar& c) const;
  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

  // Multiplication follows compose(): non-composable products vanish.
  AlgebraElement mul_path_left(const Quiver& q, const Path& p) const;   // p * this
  AlgebraElement mul_path_right(const Quiver& q, const Path& p) const;  // this * p
  AlgebraElement mul(const Quiver& q, const AlgebraElement& o) const;   // this * o

  // Uniform = all paths parallel (same source and same target).
  bool is_uniform() const;
  int uniform_source() const;
  int uniform_target() const;
  // Split into uniform components, grouped by (source, target) in structural
  // order; each component inherits its terms verbatim.
  std::vector<AlgebraElement> uniform_components() const;

  int max_term_length() const;
  int min_term_length() const;
  bool involves(const Quiver& q, const QuiverElement& x) const;

  std::string str(const Quiver& q, const AdmissibleOrder* ord = nullptr) const;

 private:
  Field field_;
  std::map<Path, Scalar> terms_;
};

}  // namespace fdimlab
