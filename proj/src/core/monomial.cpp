#include "monomial.hpp"

#include <optional>

namespace mpkit {

namespace {

std::optional<MonomialDecomposition> try_decompose(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  uint32_t n = a.rows();
  std::vector<uint32_t> mu(n, 0), img(n, 0);
  std::vector<bool> col_used(n, false);
  for (uint32_t i = 0; i < n; ++i) {
    uint32_t found = n;
    for (uint32_t j = 0; j < n; ++j) {
      if (!a(i, j)) continue;
      if (found != n) return std::nullopt; // second nonzero in this row
      found = j;
    }
    if (found == n || col_used[found]) return std::nullopt;
    col_used[found] = true;
    img[i] = found;
    mu[i] = a(i, found);
  }
  return MonomialDecomposition{std::move(mu), make_perm(std::move(img))};
}

} // namespace

bool is_monomial(const Matrix& a) { return try_decompose(a).has_value(); }

MonomialDecomposition monomial_decompose(const Matrix& a) {
  auto d = try_decompose(a);
  if (!d) fail(errc::not_monomial, "matrix is not monomial");
  return *d;
}

Matrix gram_hermitian(const Matrix& a) { return multiply(a, conj_transpose(a)); }

Matrix gram_euclidean(const Matrix& a) { return multiply(a, transpose(a)); }

bool check_involution_structure(const FieldPtr& f, const MonomialDecomposition& d,
                                pairing_mode mode) {
  if (!is_involution(d.tau)) return false;
  for (uint32_t i = 0; i < d.tau.size(); ++i) {
    uint32_t expect = mode == pairing_mode::conjugate ? f->conj(d.mu[i]) : d.mu[i];
    if (d.mu[d.tau(i)] != expect) return false;
  }
  return true;
}

bool is_nsc(const Matrix& a) {
  uint32_t k = a.rows(), t = a.cols();
  if (k > t) fail(errc::inapplicable, "non-singularity by columns needs rows <= cols");
  if (k > 8 || t > 8) fail(errc::cap_exceeded, "column-subset scan capped at 8 rows/cols");
  std::vector<uint32_t> rows_idx, cols_idx;
  for (uint32_t j = 1; j <= k; ++j) {
    rows_idx.resize(j);
    for (uint32_t r = 0; r < j; ++r) rows_idx[r] = r;
    for (uint32_t mask = 0; mask < (1u << t); ++mask) {
      if (static_cast<uint32_t>(__builtin_popcount(mask)) != j) continue;
      cols_idx.clear();
      for (uint32_t c = 0; c < t; ++c)
        if (mask & (1u << c)) cols_idx.push_back(c);
      if (determinant(submatrix(a, rows_idx, cols_idx)) == 0) return false;
    }
  }
  return true;
}

DistanceResult row_prefix_distance(const Matrix& a, uint32_t i, uint64_t cap) {
  if (i == 0 || i > a.rows()) fail(errc::out_of_range, "row prefix index out of range");
  return min_distance(make_code(top_rows(a, i)), cap);
}

} // namespace mpkit
