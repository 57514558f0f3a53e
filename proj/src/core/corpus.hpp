#pragma once

#include "mp.hpp"

#include <random>

namespace mpkit {

// Seeded generator with a rejection-sampled uniform, so streams are identical
// across platforms (the standard distributions are not).
class Rng {
public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  // Uniform on [0, n), n >= 1.
  uint32_t uniform(uint32_t n) {
    if (n == 0) fail(errc::out_of_range, "uniform needs a positive range");
    uint64_t limit = (~0ull) - (~0ull) % n;
    uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return static_cast<uint32_t>(v % n);
  }

  // Uniform nonzero field element.
  uint32_t nonzero(const FieldSpec& f) { return 1 + uniform(f.order() - 1); }

private:
  std::mt19937_64 eng_;
};

Matrix random_matrix(Rng& rng, const FieldPtr& f, uint32_t rows, uint32_t cols);
// A code of exact dimension t (retries until the random span has full rank).
LinearCode random_code(Rng& rng, const FieldPtr& f, uint32_t n, uint32_t t);
Matrix random_monomial_matrix(Rng& rng, const FieldPtr& f, uint32_t k);
// Monomial with norm-one entries, so M M-dagger is the identity.
Matrix random_unit_monomial_matrix(Rng& rng, const FieldPtr& f, uint32_t k);

// A k x l defining matrix whose Hermitian Gram is monomial, built from
// diagonal blocks: 1x1 blocks with nonzero self-pairing and 2x2 blocks of
// self-orthogonal rows with nonzero cross pairing, then disguised by row
// scaling, a row permutation and a norm-one monomial on the right. Columns
// beyond k (l >= k) are either zero or a single entry placed on a 1x1 block's
// row without cancelling its self-pairing.
Matrix random_gram_monomial_defining(Rng& rng, const FieldPtr& f, uint32_t k, uint32_t l);

// All codes of length n and dimension t, enumerated through their canonical
// generators: pivot columns in ascending combinations, free entries counted
// up in base |F|. Deterministic order, capped at |F|^(t*(n-t)) choose-work.
std::vector<LinearCode> enumerate_codes(const FieldPtr& f, uint32_t n, uint32_t t,
                                        uint64_t cap = 1ull << 20);
// Dimensions 0..n concatenated.
std::vector<LinearCode> enumerate_all_codes(const FieldPtr& f, uint32_t n,
                                            uint64_t cap = 1ull << 20);

// A deterministic batch of matrix-product specs with monomial Hermitian
// Gram, for cross-checking formulas against the brute-force scans. Fields
// alternate between GF(4) and GF(9); constituent dimension sums stay small
// enough for word enumeration. Square defining matrices, with a rectangular
// one (l = k+1) every eighth spec.
std::vector<MPSpec> sample_corpus(uint64_t seed, uint32_t count);

} // namespace mpkit
