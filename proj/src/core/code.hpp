#pragma once

#include "matrix.hpp"

namespace mpkit {

// A linear code stored by its canonical generator: the reduced row echelon
// form of any spanning matrix with zero rows dropped. Two codes are equal iff
// their canonical generators are equal, which makes comparisons exact.
class LinearCode {
public:
  LinearCode() = default;

  const FieldPtr& field() const { return f_; }
  uint32_t length() const { return n_; }
  uint32_t dim() const { return gen_.rows(); }
  const Matrix& generator() const { return gen_; }

  bool operator==(const LinearCode& o) const {
    return same_field(f_, o.f_) && n_ == o.n_ && gen_ == o.gen_;
  }

private:
  friend LinearCode make_code(const Matrix& span);
  FieldPtr f_;
  uint32_t n_ = 0;
  Matrix gen_;
};

// Span of the given rows; any matrix over the field is accepted.
LinearCode make_code(const Matrix& span);
LinearCode zero_code(const FieldPtr& f, uint32_t n);
LinearCode universe_code(const FieldPtr& f, uint32_t n);

LinearCode euclidean_dual(const LinearCode& c);
// Dual under <u,v> = sum u_i v_i^q; the field must admit conjugation.
LinearCode hermitian_dual(const LinearCode& c);

LinearCode sum_codes(const LinearCode& a, const LinearCode& b);
LinearCode intersect(const LinearCode& a, const LinearCode& b);
bool contains(const LinearCode& outer, const LinearCode& inner);

// dim(C1 meet C2-hermitian-dual) without computing the intersection:
// dim C1 - rank(G1 G2-dagger).
uint32_t meet_hermitian_dual_dim(const LinearCode& c1, const LinearCode& c2);
// Hermitian hull dimension dim(C meet C-hermitian-dual) = dim C - rank(G G-dagger).
uint32_t hermitian_hull_dim(const LinearCode& c);
// The hull computed the long way, for cross-checking the rank shortcut.
LinearCode hermitian_hull(const LinearCode& c);

bool is_hermitian_self_orthogonal(const LinearCode& c);
bool is_hermitian_dual_containing(const LinearCode& c);

struct DistanceResult {
  uint32_t value = 0;
  // A zero code has no nonzero word; value is then the sentinel length+1.
  bool zero_code = false;
};

// Minimum Hamming weight over all nonzero codewords, found by enumerating the
// message space depth-first. Refuses when |F|^dim exceeds the cap.
DistanceResult min_distance(const LinearCode& c, uint64_t cap = 1ull << 20);

} // namespace mpkit
