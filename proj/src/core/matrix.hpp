#pragma once

#include "field.hpp"

#include <cstdint>
#include <vector>

namespace mpkit {

// Dense matrix over a finite field, row-major, entries stored as canonical
// integers. All binary operations require structurally equal fields.
class Matrix {
public:
  Matrix() = default;
  Matrix(FieldPtr f, uint32_t rows, uint32_t cols)
      : f_(std::move(f)), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
  Matrix(FieldPtr f, uint32_t rows, uint32_t cols, std::vector<uint32_t> data);

  const FieldPtr& field() const { return f_; }
  uint32_t rows() const { return rows_; }
  uint32_t cols() const { return cols_; }

  uint32_t operator()(uint32_t r, uint32_t c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  uint32_t& operator()(uint32_t r, uint32_t c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  uint32_t at(uint32_t r, uint32_t c) const;
  void set(uint32_t r, uint32_t c, uint32_t v);

  const std::vector<uint32_t>& data() const { return a_; }
  bool is_zero() const;

  bool operator==(const Matrix& o) const {
    return same_field(f_, o.f_) && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

private:
  FieldPtr f_;
  uint32_t rows_ = 0, cols_ = 0;
  std::vector<uint32_t> a_;
};

Matrix identity(const FieldPtr& f, uint32_t n);
// Ones on the anti-diagonal, zero elsewhere.
Matrix flip_matrix(const FieldPtr& f, uint32_t n);

Matrix add(const Matrix& a, const Matrix& b);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix scalar_multiply(uint32_t s, const Matrix& a);
Matrix transpose(const Matrix& a);
// Entrywise x -> x^q.
Matrix conj_entrywise(const Matrix& a);
// A-dagger: transpose with every entry conjugated.
Matrix conj_transpose(const Matrix& a);
Matrix kronecker(const Matrix& a, const Matrix& b);
// Vertical stack; both operands must share the field and column count.
Matrix stack_rows(const Matrix& top, const Matrix& bottom);
Matrix row(const Matrix& a, uint32_t i);
// Rows [0, count) of a.
Matrix top_rows(const Matrix& a, uint32_t count);
Matrix submatrix(const Matrix& a, const std::vector<uint32_t>& row_idx,
                 const std::vector<uint32_t>& col_idx);

// Reduced row echelon form with unit pivots; a canonical form, so two row
// spaces are equal iff their nonzero RREF rows agree.
Matrix rref(const Matrix& a);
uint32_t rank(const Matrix& a);
// Basis of the right kernel {x : A x = 0} as matrix rows, RREF-canonical.
// A code's worth of rows: zero kernel yields a 0 x cols matrix.
Matrix kernel(const Matrix& a);
uint32_t determinant(const Matrix& a);

} // namespace mpkit
