#include "corpus.hpp"

#include <algorithm>
#include <deque>

namespace mpkit {

Matrix random_matrix(Rng& rng, const FieldPtr& f, uint32_t rows, uint32_t cols) {
  Matrix m(f, rows, cols);
  for (uint32_t i = 0; i < rows; ++i)
    for (uint32_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(f->order());
  return m;
}

LinearCode random_code(Rng& rng, const FieldPtr& f, uint32_t n, uint32_t t) {
  if (t > n) fail(errc::out_of_range, "code dimension exceeds length");
  if (t == 0) return zero_code(f, n);
  for (;;) {
    LinearCode c = make_code(random_matrix(rng, f, t, n));
    if (c.dim() == t) return c;
  }
}

Matrix random_monomial_matrix(Rng& rng, const FieldPtr& f, uint32_t k) {
  // Fisher-Yates for the column of each row's entry.
  std::vector<uint32_t> img(k);
  for (uint32_t i = 0; i < k; ++i) img[i] = i;
  for (uint32_t i = k; i > 1; --i) std::swap(img[i - 1], img[rng.uniform(i)]);
  Matrix m(f, k, k);
  for (uint32_t i = 0; i < k; ++i) m(i, img[i]) = rng.nonzero(*f);
  return m;
}

Matrix random_unit_monomial_matrix(Rng& rng, const FieldPtr& f, uint32_t k) {
  if (!f->has_conjugation()) fail(errc::inapplicable, "norm-one entries need even degree");
  Matrix m = random_monomial_matrix(rng, f, k);
  // Replace each entry by a norm-one element: the generator's multiples of
  // q-1 in exponent run through the kernel of x -> x^(q+1).
  uint32_t q = f->q();
  for (uint32_t i = 0; i < k; ++i)
    for (uint32_t j = 0; j < k; ++j)
      if (m(i, j)) m(i, j) = f->pow(f->generator(), static_cast<uint64_t>(q - 1) * rng.uniform(q + 1));
  return m;
}

namespace {

// Nonzero vectors (x1, x2) with x1 x1^q + x2 x2^q = 0. Scanning the plane is
// quadratic in the field order, so the result is memoized per field.
const std::vector<std::pair<uint32_t, uint32_t>>& self_paired_vectors(const FieldPtr& fp) {
  // deque keeps earlier entries' addresses stable as the cache grows
  static std::deque<std::pair<FieldPtr, std::vector<std::pair<uint32_t, uint32_t>>>> cache;
  for (const auto& [key, vecs] : cache)
    if (same_field(key, fp)) return vecs;
  const FieldSpec& f = *fp;
  std::vector<std::pair<uint32_t, uint32_t>> out;
  for (uint32_t a = 0; a < f.order(); ++a)
    for (uint32_t b = 0; b < f.order(); ++b) {
      if (!a && !b) continue;
      if (f.add(f.mul(a, f.conj(a)), f.mul(b, f.conj(b))) == 0) out.emplace_back(a, b);
    }
  cache.emplace_back(fp, std::move(out));
  return cache.back().second;
}

} // namespace

Matrix random_gram_monomial_defining(Rng& rng, const FieldPtr& f, uint32_t k, uint32_t l) {
  if (l < k) fail(errc::out_of_range, "need at least as many columns as rows");
  const FieldSpec& F = *f;
  Matrix a0(f, k, k);
  const auto& iso = self_paired_vectors(f);
  uint32_t i = 0;
  while (i < k) {
    if (i + 1 < k && rng.uniform(2) == 0) {
      // 2x2 block of self-orthogonal rows with nonzero cross pairing.
      for (;;) {
        auto x = iso[rng.uniform(static_cast<uint32_t>(iso.size()))];
        auto y = iso[rng.uniform(static_cast<uint32_t>(iso.size()))];
        uint32_t cross = F.add(F.mul(x.first, F.conj(y.first)), F.mul(x.second, F.conj(y.second)));
        if (!cross) continue;
        a0(i, i) = x.first;
        a0(i, i + 1) = x.second;
        a0(i + 1, i) = y.first;
        a0(i + 1, i + 1) = y.second;
        break;
      }
      i += 2;
    } else {
      a0(i, i) = rng.nonzero(F);
      ++i;
    }
  }

  // Disguise: row scaling and permutation conjugate the Gram's monomial
  // structure; a norm-one monomial on the right leaves it untouched.
  Matrix d(f, k, k);
  for (uint32_t r = 0; r < k; ++r) d(r, r) = rng.nonzero(F);
  std::vector<uint32_t> img(k);
  for (uint32_t r = 0; r < k; ++r) img[r] = r;
  for (uint32_t r = k; r > 1; --r) std::swap(img[r - 1], img[rng.uniform(r)]);
  Matrix p(f, k, k);
  for (uint32_t r = 0; r < k; ++r) p(r, img[r]) = 1;
  Matrix sq = multiply(p, multiply(d, multiply(a0, random_unit_monomial_matrix(rng, f, k))));

  if (l == k) return sq;

  // Extra columns: zero, or one entry on a Gram fixed point that keeps the
  // diagonal pairing nonzero.
  MonomialDecomposition g = monomial_decompose(gram_hermitian(sq));
  std::vector<uint32_t> diag = g.mu;
  auto fixed = fixed_points(g.tau);
  Matrix out(f, k, l);
  for (uint32_t r = 0; r < k; ++r)
    for (uint32_t c = 0; c < k; ++c) out(r, c) = sq(r, c);
  for (uint32_t c = k; c < l; ++c) {
    if (fixed.empty() || rng.uniform(3) == 0) continue; // leave the column zero
    uint32_t r = fixed[rng.uniform(static_cast<uint32_t>(fixed.size()))];
    for (uint32_t tries = 0; tries < F.order(); ++tries) {
      uint32_t beta = rng.nonzero(F);
      uint32_t bumped = F.add(diag[r], F.mul(beta, F.conj(beta)));
      if (bumped) {
        out(r, c) = beta;
        diag[r] = bumped;
        break;
      }
    }
  }
  return out;
}

std::vector<LinearCode> enumerate_codes(const FieldPtr& f, uint32_t n, uint32_t t, uint64_t cap) {
  if (t > n) fail(errc::out_of_range, "code dimension exceeds length");
  const FieldSpec& F = *f;
  std::vector<LinearCode> out;
  if (t == 0) {
    out.push_back(zero_code(f, n));
    return out;
  }

  // Ascending combinations of pivot columns.
  std::vector<uint32_t> pivots(t);
  for (uint32_t r = 0; r < t; ++r) pivots[r] = r;
  uint64_t budget = cap;
  for (;;) {
    std::vector<std::pair<uint32_t, uint32_t>> free_pos;
    for (uint32_t r = 0; r < t; ++r)
      for (uint32_t c = pivots[r] + 1; c < n; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
          free_pos.emplace_back(r, c);

    uint64_t assignments = 1;
    for (size_t s = 0; s < free_pos.size(); ++s) {
      assignments *= F.order();
      if (assignments > budget) fail(errc::cap_exceeded, "code enumeration exceeds cap");
    }
    budget -= assignments;

    std::vector<uint32_t> digits(free_pos.size(), 0);
    for (uint64_t counter = 0; counter < assignments; ++counter) {
      uint64_t v = counter;
      for (size_t s = 0; s < free_pos.size(); ++s) {
        digits[s] = static_cast<uint32_t>(v % F.order());
        v /= F.order();
      }
      Matrix gen(f, t, n);
      for (uint32_t r = 0; r < t; ++r) gen(r, pivots[r]) = 1;
      for (size_t s = 0; s < free_pos.size(); ++s) gen(free_pos[s].first, free_pos[s].second) = digits[s];
      out.push_back(make_code(gen)); // already canonical; make_code just adopts it
    }

    // Next combination.
    uint32_t r = t;
    while (r > 0) {
      --r;
      if (pivots[r] < n - (t - r)) {
        ++pivots[r];
        for (uint32_t s = r + 1; s < t; ++s) pivots[s] = pivots[s - 1] + 1;
        break;
      }
      if (r == 0) return out;
    }
  }
}

std::vector<LinearCode> enumerate_all_codes(const FieldPtr& f, uint32_t n, uint64_t cap) {
  std::vector<LinearCode> out;
  for (uint32_t t = 0; t <= n; ++t) {
    auto part = enumerate_codes(f, n, t, cap);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<MPSpec> sample_corpus(uint64_t seed, uint32_t count) {
  Rng rng(seed);
  FieldPtr f4 = make_field(2, 2);
  FieldPtr f9 = make_field(3, 2);
  std::vector<MPSpec> out;
  out.reserve(count);
  for (uint32_t idx = 0; idx < count; ++idx) {
    bool gf4 = idx % 2 == 0;
    const FieldPtr& f = gf4 ? f4 : f9;
    uint32_t dim_cap = gf4 ? 8 : 5;

    uint32_t k = 2 + rng.uniform(2);
    uint32_t n = 1 + rng.uniform(5);
    uint32_t l = (idx % 8 == 7) ? k + 1 : k;
    if (idx % 5 == 4) { // keep some specs small enough for full-space scans
      k = 2;
      l = 2;
      n = 1 + rng.uniform(2);
    }

    std::vector<LinearCode> codes;
    uint32_t remaining = dim_cap;
    for (uint32_t i = 0; i < k; ++i) {
      uint32_t hi = std::min(n, remaining);
      uint32_t t = rng.uniform(hi + 1);
      remaining -= t;
      codes.push_back(random_code(rng, f, n, t));
    }

    Matrix a = random_gram_monomial_defining(rng, f, k, l);
    if (!is_monomial(gram_hermitian(a)))
      fail(errc::internal, "constructed defining matrix lost its monomial pairing");
    out.push_back(make_mpspec(std::move(a), std::move(codes)));
  }
  return out;
}

} // namespace mpkit
