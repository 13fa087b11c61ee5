#include "fdimlab/linalg.hpp"

#include <algorithm>

namespace fdimlab {

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::from_columns(const Field& f, std::size_t rows,
                      const std::vector<std::vector<Scalar>>& cols) {
  Mat m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw domain_error("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw domain_error("matrix product shape mismatch");
  Mat r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw domain_error("shape mismatch");
  Mat r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw domain_error("shape mismatch");
  Mat r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Mat Mat::scaled(const Scalar& c) const {
  Mat r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Scalar> Mat::column(std::size_t j) const {
  std::vector<Scalar> v(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw domain_error("apply shape mismatch");
  std::vector<Scalar> r(rows_, Scalar::zero(field_));
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& aij = at(i, j);
      if (!aij.is_zero()) r[i] += aij * v[j];
    }
  }
  return r;
}

Mat Mat::select_columns(const std::vector<std::size_t>& idx) const {
  Mat r(field_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
  return r;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_) throw domain_error("hstack shape mismatch");
  Mat r(a.field_, a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
  }
  return r;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  if (a.cols_ != b.cols_) throw domain_error("vstack shape mismatch");
  Mat r(a.field_, a.rows_ + b.rows_, a.cols_);
  for (std::size_t j = 0; j < a.cols_; ++j) {
    for (std::size_t i = 0; i < a.rows_; ++i) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i) r.at(a.rows_ + i, j) = b.at(i, j);
  }
  return r;
}

Mat::Echelon Mat::echelon() const {
  Echelon e{*this, {}, 0};
  Mat& m = e.rref;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t piv = rows_;
    for (std::size_t i = row; i < rows_; ++i)
      if (!m.at(i, col).is_zero()) { piv = i; break; }
    if (piv == rows_) continue;
    if (piv != row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(row, j));
    Scalar inv = m.at(row, col).inverse();
    for (std::size_t j = col; j < cols_; ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row) continue;
      Scalar c = m.at(i, col);
      if (c.is_zero()) continue;
      for (std::size_t j = col; j < cols_; ++j)
        m.at(i, j) -= c * m.at(row, j);
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  e.rank = row;
  return e;
}

std::size_t Mat::rank() const { return echelon().rank; }

Mat Mat::kernel_basis() const {
  Echelon e = echelon();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat k(field_, cols_, free_cols.size());
  for (std::size_t fj = 0; fj < free_cols.size(); ++fj) {
    std::size_t fc = free_cols[fj];
    k.at(fc, fj) = Scalar::one(field_);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
      k.at(e.pivot_cols[r], fj) = -e.rref.at(r, fc);
  }
  return k;
}

std::optional<Mat> Mat::solve(const Mat& b) const {
  if (b.rows_ != rows_) throw domain_error("solve shape mismatch");
  Mat aug = hstack(*this, b);
  Echelon e = aug.echelon();
  // Inconsistent iff some pivot lands in the b-block.
  for (std::size_t c : e.pivot_cols)
    if (c >= cols_) return std::nullopt;
  Mat x(field_, cols_, b.cols_);
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    std::size_t pc = e.pivot_cols[r];
    for (std::size_t j = 0; j < b.cols_; ++j)
      x.at(pc, j) = e.rref.at(r, cols_ + j);
  }
  return x;
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  auto x = solve(identity(field_, rows_));
  if (!x) return std::nullopt;
  // solve() returns a particular solution; for square full-rank it is exact.
  if (!((*this) * *x == identity(field_, rows_))) return std::nullopt;
  return x;
}

std::vector<std::size_t> Mat::independent_columns() const {
  return echelon().pivot_cols;
}

bool SpanBuilder::add(const std::vector<Scalar>& v) {
  auto [res, expr] = reduce_tracked(v);
  std::size_t p = 0;
  while (p < dim_ && res[p].is_zero()) ++p;
  if (p == dim_) return false;
  Scalar inv = res[p].inverse();
  std::vector<Scalar> norm = res;
  for (auto& x : norm) x *= inv;
  std::vector<Scalar> coeffs(basis_.size() + 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < expr.size(); ++i) coeffs[i] = -expr[i] * inv;
  coeffs[basis_.size()] = inv;
  basis_.push_back(v);
  for (auto& row : rows_) row.coeffs.push_back(Scalar::zero(field_));
  rows_.push_back(Row{p, std::move(norm), std::move(coeffs)});
  return true;
}

bool SpanBuilder::contains(const std::vector<Scalar>& v) const {
  auto [res, expr] = reduce_tracked(v);
  (void)expr;
  return vec_is_zero(res);
}

std::optional<std::vector<Scalar>> SpanBuilder::coordinates(
    const std::vector<Scalar>& v) const {
  auto [res, expr] = reduce_tracked(v);
  if (!vec_is_zero(res)) return std::nullopt;
  expr.resize(basis_.size(), Scalar::zero(field_));
  return expr;
}

Mat SpanBuilder::basis_matrix() const {
  Mat m(field_, dim_, basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j)
    for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = basis_[j][i];
  return m;
}

std::pair<std::vector<Scalar>, std::vector<Scalar>> SpanBuilder::reduce_tracked(
    const std::vector<Scalar>& v) const {
  if (v.size() != dim_) throw domain_error("span vector length mismatch");
  std::vector<Scalar> res = v;
  std::vector<Scalar> expr(basis_.size(), Scalar::zero(field_));
  for (const Row& row : rows_) {
    const Scalar& c = res[row.pivot];
    if (c.is_zero()) continue;
    Scalar cc = c;  // res changes below
    for (std::size_t i = 0; i < dim_; ++i)
      if (!row.v[i].is_zero()) res[i] -= cc * row.v[i];
    for (std::size_t i = 0; i < row.coeffs.size(); ++i)
      if (!row.coeffs[i].is_zero()) expr[i] += cc * row.coeffs[i];
  }
  return {std::move(res), std::move(expr)};
}

std::vector<Scalar> zero_vector(const Field& f, std::size_t n) {
  return std::vector<Scalar>(n, Scalar::zero(f));
}

std::vector<Scalar> unit_vector(const Field& f, std::size_t n, std::size_t i) {
  auto v = zero_vector(f, n);
  v[i] = Scalar::one(f);
  return v;
}

void axpy(std::vector<Scalar>& y, const Scalar& c, const std::vector<Scalar>& x) {
  if (y.size() != x.size()) throw domain_error("axpy length mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += c * x[i];
}

bool vec_is_zero(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace fdimlab
