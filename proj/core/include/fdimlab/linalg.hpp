#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fdimlab/scalar.hpp"

namespace fdimlab {

// Dense matrix over an exact field. Everything downstream (structure
// constants, module actions, resolutions) is desk-scale, so plain Gaussian
// elimination with exact arithmetic is the whole story.
class Mat {
 public:
  Mat() : rows_(0), cols_(0), field_(Field::rationals()) {}
  Mat(const Field& f, std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), field_(f),
        a_(rows * cols, Scalar::zero(f)) {}

  static Mat identity(const Field& f, std::size_t n);
  static Mat from_columns(const Field& f, std::size_t rows,
                          const std::vector<std::vector<Scalar>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const Mat& o) const;

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Scalar& c) const;
  Mat transpose() const;

  std::vector<Scalar> column(std::size_t j) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // this * v
  Mat select_columns(const std::vector<std::size_t>& idx) const;

  static Mat hstack(const Mat& a, const Mat& b);
  static Mat vstack(const Mat& a, const Mat& b);

  struct Echelon;
  Echelon echelon() const;

  std::size_t rank() const;
  // Columns spanning {x : Ax = 0}.
  Mat kernel_basis() const;
  // Any X with A*X = B; nullopt when inconsistent.
  std::optional<Mat> solve(const Mat& b) const;
  std::optional<Mat> inverse() const;

  // Independent columns of A (first spanning subset, in order).
  std::vector<std::size_t> independent_columns() const;

 private:
  std::size_t rows_, cols_;
  Field field_;
  std::vector<Scalar> a_;
};

struct Mat::Echelon {
  Mat rref;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

// Incremental column span with exact elimination; used for closures and
// basis completions.
class SpanBuilder {
 public:
  SpanBuilder(const Field& f, std::size_t dim) : field_(f), dim_(dim) {}

  // Returns true when v enlarged the span.
  bool add(const std::vector<Scalar>& v);
  bool contains(const std::vector<Scalar>& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  // The vectors as added (only those that enlarged the span).
  const std::vector<std::vector<Scalar>>& basis() const { return basis_; }
  Mat basis_matrix() const;  // dim x rank

  // Coordinates of v in terms of basis(); nullopt when v is outside the span.
  std::optional<std::vector<Scalar>> coordinates(const std::vector<Scalar>& v) const;

 private:
  Field field_;
  std::size_t dim_;
  struct Row {
    std::size_t pivot;
    std::vector<Scalar> v;       // reduced vector, pivot entry = 1
    std::vector<Scalar> coeffs;  // expression of v over basis_
  };
  std::vector<Row> rows_;
  std::vector<std::vector<Scalar>> basis_;

  // Reduces v against rows_, returning the residual and its expression.
  std::pair<std::vector<Scalar>, std::vector<Scalar>> reduce_tracked(
      const std::vector<Scalar>& v) const;
};

std::vector<Scalar> zero_vector(const Field& f, std::size_t n);
std::vector<Scalar> unit_vector(const Field& f, std::size_t n, std::size_t i);
void axpy(std::vector<Scalar>& y, const Scalar& c, const std::vector<Scalar>& x);
bool vec_is_zero(const std::vector<Scalar>& v);

}  // namespace fdimlab
