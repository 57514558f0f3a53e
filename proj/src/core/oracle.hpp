#pragma once

#include "mp.hpp"

namespace mpkit {

// Reference implementations that sidestep the echelon-form machinery: they
// enumerate words explicitly and count. Deliberately naive; used to
// cross-check the formula-based paths. Every enumeration refuses once its
// word count passes the cap.

// All |F|^rows words spanned by the given rows, in message order: message
// counter digits little-endian, digit i scaling row i. Duplicates appear when
// the rows are dependent.
std::vector<std::vector<uint32_t>> enumerate_codewords(const Matrix& gen, uint64_t cap = 1ull << 20);

// Dimension as log_|F| of the number of distinct spanned words.
uint32_t brute_code_dim(const Matrix& gen, uint64_t cap = 1ull << 20);

// Dimension of the Hermitian dual by scanning the full ambient space.
uint32_t brute_hermitian_dual_dim(const Matrix& gen, uint64_t cap = 1ull << 20);

// Hermitian hull dimension by scanning the spanned words against the
// spanning rows themselves; no ambient-space scan needed.
uint32_t brute_hull_dim(const Matrix& gen, uint64_t cap = 1ull << 20);

DistanceResult brute_min_distance(const Matrix& gen, uint64_t cap = 1ull << 20);

struct BruteFlags {
  uint32_t hull_dim = 0, dim = 0, dual_dim = 0;
  bool hdc = false, ahdc = false, hso = false, ahso = false, hlcd = false;
  // True when dual membership was decided by literal word-set containment
  // rather than hull-dimension arithmetic.
  bool by_word_sets = false;
};

// Classification by explicit word sets when the ambient space fits under the
// cap, otherwise by brute hull dimension plus rank-nullity.
BruteFlags brute_classify(const Matrix& gen, uint64_t cap = 1ull << 20);

// Matrix-product codewords straight from the definition: every tuple of
// constituent messages, blocks assembled as sum_i a(i,j) c_i. Message order,
// constituent 0's digits first.
std::vector<std::vector<uint32_t>> enumerate_mp_words(const MPSpec& s, uint64_t cap = 1ull << 20);

// The definitional spanning set: words whose message tuple is a single unit
// vector, ordered by constituent then by row.
Matrix mp_unit_words(const MPSpec& s);

uint32_t brute_mp_hull_dim(const MPSpec& s, uint64_t cap = 1ull << 20);
BruteFlags brute_mp_classify(const MPSpec& s, uint64_t cap = 1ull << 20);

// Involutions of S_k counted by filtering all k! permutations; k <= 8.
uint64_t brute_involution_count(uint32_t k);

} // namespace mpkit
