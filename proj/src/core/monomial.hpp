#pragma once

#include "code.hpp"
#include "perm.hpp"

namespace mpkit {

// B = D P with D = diag(mu) and P the permutation matrix putting a 1 at
// (i, tau(i)): row i carries its only nonzero entry mu[i] in column tau(i).
struct MonomialDecomposition {
  std::vector<uint32_t> mu;
  Perm tau;
};

bool is_monomial(const Matrix& a);
MonomialDecomposition monomial_decompose(const Matrix& a);

// A A-dagger: entry (i,j) is the Hermitian inner product of rows i and j.
Matrix gram_hermitian(const Matrix& a);
// A A-transpose, the Euclidean pairing analogue.
Matrix gram_euclidean(const Matrix& a);

enum class pairing_mode { conjugate, transpose };

// The shape a monomial Gram matrix is forced into: tau must square to the
// identity, and the scalars must satisfy mu[tau(i)] = mu[i]^q under the
// Hermitian pairing (conjugate mode) or mu[tau(i)] = mu[i] under the
// Euclidean one (transpose mode).
bool check_involution_structure(const FieldPtr& f, const MonomialDecomposition& d,
                                pairing_mode mode);

// Non-singular by columns: for every j, each j x j submatrix drawn from the
// first j rows has nonzero determinant. Exhaustive over column subsets, so
// capped at 8 rows/columns.
bool is_nsc(const Matrix& a);

// Minimum distance of the code spanned by the first i rows (1 <= i <= rows).
DistanceResult row_prefix_distance(const Matrix& a, uint32_t i, uint64_t cap = 1ull << 20);

} // namespace mpkit
