#include "code.hpp"

namespace mpkit {

LinearCode make_code(const Matrix& span) {
  if (!span.field()) fail(errc::mismatch, "code needs a field");
  LinearCode c;
  c.f_ = span.field();
  c.n_ = span.cols();
  Matrix r = rref(span);
  uint32_t nz = 0;
  for (uint32_t i = 0; i < r.rows(); ++i) {
    bool any = false;
    for (uint32_t j = 0; j < r.cols(); ++j)
      if (r(i, j)) {
        any = true;
        break;
      }
    if (any) ++nz;
    else break; // rref sinks zero rows to the bottom
  }
  c.gen_ = top_rows(r, nz);
  return c;
}

LinearCode zero_code(const FieldPtr& f, uint32_t n) { return make_code(Matrix(f, 0, n)); }

LinearCode universe_code(const FieldPtr& f, uint32_t n) { return make_code(identity(f, n)); }

LinearCode euclidean_dual(const LinearCode& c) { return make_code(kernel(c.generator())); }

LinearCode hermitian_dual(const LinearCode& c) {
  // <g, x> = sum g_i x_i^q vanishes iff sum g_i^q x_i does, so the dual is
  // the kernel of the entrywise-conjugated generator.
  return make_code(kernel(conj_entrywise(c.generator())));
}

LinearCode sum_codes(const LinearCode& a, const LinearCode& b) {
  if (!same_field(a.field(), b.field()) || a.length() != b.length())
    fail(errc::mismatch, "code sum needs matching field and length");
  return make_code(stack_rows(a.generator(), b.generator()));
}

LinearCode intersect(const LinearCode& a, const LinearCode& b) {
  // Meet through the lattice complement: (A^perp + B^perp)^perp.
  return euclidean_dual(sum_codes(euclidean_dual(a), euclidean_dual(b)));
}

bool contains(const LinearCode& outer, const LinearCode& inner) {
  if (!same_field(outer.field(), inner.field()) || outer.length() != inner.length())
    fail(errc::mismatch, "containment needs matching field and length");
  return rank(stack_rows(outer.generator(), inner.generator())) == outer.dim();
}

uint32_t meet_hermitian_dual_dim(const LinearCode& c1, const LinearCode& c2) {
  if (!same_field(c1.field(), c2.field()) || c1.length() != c2.length())
    fail(errc::mismatch, "codes must share field and length");
  return c1.dim() - rank(multiply(c1.generator(), conj_transpose(c2.generator())));
}

uint32_t hermitian_hull_dim(const LinearCode& c) { return meet_hermitian_dual_dim(c, c); }

LinearCode hermitian_hull(const LinearCode& c) { return intersect(c, hermitian_dual(c)); }

bool is_hermitian_self_orthogonal(const LinearCode& c) {
  return multiply(c.generator(), conj_transpose(c.generator())).is_zero();
}

bool is_hermitian_dual_containing(const LinearCode& c) {
  return contains(c, hermitian_dual(c));
}

namespace {

void distance_rec(const FieldSpec& F, const Matrix& gen, uint32_t depth, bool nonzero,
                  std::vector<uint32_t>& acc, uint32_t& best) {
  if (depth == gen.rows()) {
    if (!nonzero) return;
    uint32_t w = 0;
    for (uint32_t v : acc)
      if (v) ++w;
    if (w < best) best = w;
    return;
  }
  uint32_t n = gen.cols();
  std::vector<uint32_t> saved = acc;
  for (uint32_t coef = 0; coef < F.order(); ++coef) {
    if (coef == 0) {
      distance_rec(F, gen, depth + 1, nonzero, acc, best);
      continue;
    }
    for (uint32_t j = 0; j < n; ++j) acc[j] = F.add(saved[j], F.mul(coef, gen(depth, j)));
    distance_rec(F, gen, depth + 1, true, acc, best);
  }
  acc = saved;
}

} // namespace

DistanceResult min_distance(const LinearCode& c, uint64_t cap) {
  uint32_t t = c.dim();
  if (t == 0) return {c.length() + 1, true};
  const FieldSpec& F = *c.field();
  uint64_t words = 1;
  for (uint32_t i = 0; i < t; ++i) {
    words *= F.order();
    if (words > cap) fail(errc::cap_exceeded, "codeword enumeration exceeds cap");
  }
  std::vector<uint32_t> acc(c.length(), 0);
  uint32_t best = c.length();
  distance_rec(F, c.generator(), 0, false, acc, best);
  return {best, false};
}

} // namespace mpkit
