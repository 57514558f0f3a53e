#include "matrix.hpp"

namespace mpkit {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!same_field(a.field(), b.field())) fail(errc::mismatch, "matrices over different fields");
}

} // namespace

Matrix::Matrix(FieldPtr f, uint32_t rows, uint32_t cols, std::vector<uint32_t> data)
    : f_(std::move(f)), rows_(rows), cols_(cols), a_(std::move(data)) {
  if (a_.size() != static_cast<size_t>(rows_) * cols_)
    fail(errc::dimension_mismatch, "matrix data length does not match shape");
  for (uint32_t v : a_) f_->check_element(v);
}

uint32_t Matrix::at(uint32_t r, uint32_t c) const {
  if (r >= rows_ || c >= cols_) fail(errc::out_of_range, "matrix index out of range");
  return (*this)(r, c);
}

void Matrix::set(uint32_t r, uint32_t c, uint32_t v) {
  if (r >= rows_ || c >= cols_) fail(errc::out_of_range, "matrix index out of range");
  f_->check_element(v);
  (*this)(r, c) = v;
}

bool Matrix::is_zero() const {
  for (uint32_t v : a_)
    if (v) return false;
  return true;
}

Matrix identity(const FieldPtr& f, uint32_t n) {
  Matrix m(f, n, n);
  for (uint32_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix flip_matrix(const FieldPtr& f, uint32_t n) {
  Matrix m(f, n, n);
  for (uint32_t i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
  return m;
}

Matrix add(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(errc::dimension_mismatch, "matrix addition shape mismatch");
  const FieldSpec& F = *a.field();
  Matrix out(a.field(), a.rows(), a.cols());
  for (uint32_t i = 0; i < a.rows(); ++i)
    for (uint32_t j = 0; j < a.cols(); ++j) out(i, j) = F.add(a(i, j), b(i, j));
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) fail(errc::dimension_mismatch, "matrix product shape mismatch");
  const FieldSpec& F = *a.field();
  Matrix out(a.field(), a.rows(), b.cols());
  for (uint32_t i = 0; i < a.rows(); ++i)
    for (uint32_t k = 0; k < a.cols(); ++k) {
      uint32_t aik = a(i, k);
      if (!aik) continue;
      for (uint32_t j = 0; j < b.cols(); ++j)
        out(i, j) = F.add(out(i, j), F.mul(aik, b(k, j)));
    }
  return out;
}

Matrix scalar_multiply(uint32_t s, const Matrix& a) {
  const FieldSpec& F = *a.field();
  F.check_element(s);
  Matrix out(a.field(), a.rows(), a.cols());
  for (uint32_t i = 0; i < a.rows(); ++i)
    for (uint32_t j = 0; j < a.cols(); ++j) out(i, j) = F.mul(s, a(i, j));
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.field(), a.cols(), a.rows());
  for (uint32_t i = 0; i < a.rows(); ++i)
    for (uint32_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Matrix conj_entrywise(const Matrix& a) {
  const FieldSpec& F = *a.field();
  Matrix out(a.field(), a.rows(), a.cols());
  for (uint32_t i = 0; i < a.rows(); ++i)
    for (uint32_t j = 0; j < a.cols(); ++j) out(i, j) = F.conj(a(i, j));
  return out;
}

Matrix conj_transpose(const Matrix& a) {
  const FieldSpec& F = *a.field();
  Matrix out(a.field(), a.cols(), a.rows());
  for (uint32_t i = 0; i < a.rows(); ++i)
    for (uint32_t j = 0; j < a.cols(); ++j) out(j, i) = F.conj(a(i, j));
  return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  const FieldSpec& F = *a.field();
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (uint32_t i1 = 0; i1 < a.rows(); ++i1)
    for (uint32_t j1 = 0; j1 < a.cols(); ++j1) {
      uint32_t s = a(i1, j1);
      if (!s) continue;
      for (uint32_t i2 = 0; i2 < b.rows(); ++i2)
        for (uint32_t j2 = 0; j2 < b.cols(); ++j2)
          out(i1 * b.rows() + i2, j1 * b.cols() + j2) = F.mul(s, b(i2, j2));
    }
  return out;
}

Matrix stack_rows(const Matrix& top, const Matrix& bottom) {
  require_same_field(top, bottom);
  if (top.cols() != bottom.cols()) fail(errc::dimension_mismatch, "stack needs equal column counts");
  Matrix out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (uint32_t i = 0; i < top.rows(); ++i)
    for (uint32_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
  for (uint32_t i = 0; i < bottom.rows(); ++i)
    for (uint32_t j = 0; j < top.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
  return out;
}

Matrix row(const Matrix& a, uint32_t i) {
  if (i >= a.rows()) fail(errc::out_of_range, "row index out of range");
  Matrix out(a.field(), 1, a.cols());
  for (uint32_t j = 0; j < a.cols(); ++j) out(0, j) = a(i, j);
  return out;
}

Matrix top_rows(const Matrix& a, uint32_t count) {
  if (count > a.rows()) fail(errc::out_of_range, "row count out of range");
  Matrix out(a.field(), count, a.cols());
  for (uint32_t i = 0; i < count; ++i)
    for (uint32_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

Matrix submatrix(const Matrix& a, const std::vector<uint32_t>& row_idx,
                 const std::vector<uint32_t>& col_idx) {
  Matrix out(a.field(), static_cast<uint32_t>(row_idx.size()), static_cast<uint32_t>(col_idx.size()));
  for (uint32_t i = 0; i < row_idx.size(); ++i)
    for (uint32_t j = 0; j < col_idx.size(); ++j) out(i, j) = a.at(row_idx[i], col_idx[j]);
  return out;
}

Matrix rref(const Matrix& a) {
  const FieldSpec& F = *a.field();
  Matrix m = a;
  uint32_t pivot_row = 0;
  for (uint32_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    uint32_t sel = pivot_row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row)
      for (uint32_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(pivot_row, j));
    uint32_t s = F.inv(m(pivot_row, col));
    for (uint32_t j = col; j < m.cols(); ++j) m(pivot_row, j) = F.mul(s, m(pivot_row, j));
    for (uint32_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row) continue;
      uint32_t fac = m(i, col);
      if (!fac) continue;
      for (uint32_t j = col; j < m.cols(); ++j)
        m(i, j) = F.sub(m(i, j), F.mul(fac, m(pivot_row, j)));
    }
    ++pivot_row;
  }
  return m;
}

uint32_t rank(const Matrix& a) {
  Matrix r = rref(a);
  uint32_t rk = 0;
  for (uint32_t i = 0; i < r.rows(); ++i) {
    bool nonzero = false;
    for (uint32_t j = 0; j < r.cols(); ++j)
      if (r(i, j)) {
        nonzero = true;
        break;
      }
    if (nonzero) ++rk;
  }
  return rk;
}

Matrix kernel(const Matrix& a) {
  const FieldSpec& F = *a.field();
  Matrix r = rref(a);
  uint32_t n = a.cols();
  // Locate pivot columns in the echelon form.
  std::vector<int32_t> pivot_of_col(n, -1);
  uint32_t rk = 0;
  for (uint32_t i = 0; i < r.rows(); ++i) {
    uint32_t j = 0;
    while (j < n && r(i, j) == 0) ++j;
    if (j == n) break;
    pivot_of_col[j] = static_cast<int32_t>(i);
    ++rk;
  }
  Matrix out(a.field(), n - rk, n);
  uint32_t b = 0;
  for (uint32_t free_col = 0; free_col < n; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    out(b, free_col) = 1;
    for (uint32_t j = 0; j < n; ++j)
      if (pivot_of_col[j] >= 0)
        out(b, j) = F.neg(r(static_cast<uint32_t>(pivot_of_col[j]), free_col));
    ++b;
  }
  return rref(out);
}

uint32_t determinant(const Matrix& a) {
  if (a.rows() != a.cols()) fail(errc::dimension_mismatch, "determinant needs a square matrix");
  const FieldSpec& F = *a.field();
  Matrix m = a;
  uint32_t n = a.rows();
  uint32_t det = 1;
  for (uint32_t col = 0; col < n; ++col) {
    uint32_t sel = col;
    while (sel < n && m(sel, col) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      for (uint32_t j = 0; j < n; ++j) std::swap(m(sel, j), m(col, j));
      det = F.neg(det);
    }
    det = F.mul(det, m(col, col));
    uint32_t s = F.inv(m(col, col));
    for (uint32_t i = col + 1; i < n; ++i) {
      uint32_t fac = F.mul(s, m(i, col));
      if (!fac) continue;
      for (uint32_t j = col; j < n; ++j) m(i, j) = F.sub(m(i, j), F.mul(fac, m(col, j)));
    }
  }
  return det;
}

} // namespace mpkit
