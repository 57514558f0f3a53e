#pragma once

#include "corpus.hpp"
#include "io.hpp"

#include <optional>

namespace mpkit {

// All k x k matrices over the field whose Hermitian Gram is monomial, in
// ascending row-major encoding. Exhaustive, so it refuses once the search
// space |F|^(k*k) passes 2^26.
std::vector<Matrix> all_gram_monomial_matrices(const FieldPtr& f, uint32_t k);

// Seeded substitute when exhaustion is out of reach: uniform draws mixed
// with matrices built to have a monomial Gram, filtered to the real thing.
std::vector<Matrix> sample_gram_monomial_matrices(const FieldPtr& f, uint32_t k, uint32_t count,
                                                  uint64_t seed);

// A search walks defining matrices and constituent-code tuples, classifies
// each spec whose Gram is monomial, and keeps those with the target flag.
// Config text is line-oriented:
//   field p=2 m=2 [modulus=1,1,1]
//   k=2
//   n=2
//   target=AHDC            one of HDC AHDC HSO AHSO HLCD
//   codes=exhaustive       or: codes=random
//   dims=1,1               or: dims=any
//   defining=auto          or: exhaustive | random | gram
//   code_samples=500  defining_samples=200  max_hits=10
//   max_candidates=1000000  seed=1  cap=1048576
// Every key except field/k/n/target is optional.
struct SearchConfig {
  FieldPtr f;
  uint32_t k = 0;
  uint32_t n = 0;
  std::string target;
  std::optional<std::vector<uint32_t>> dims; // one per constituent; nullopt = any
  bool codes_exhaustive = true;
  uint32_t code_samples = 500;
  enum class defining_pool { auto_pick, exhaustive, random, gram };
  defining_pool defining = defining_pool::auto_pick;
  uint32_t defining_samples = 200;
  uint32_t max_hits = 10;
  uint64_t max_candidates = 1'000'000;
  uint64_t seed = 1;
  uint64_t cap = 1ull << 20;
};

SearchConfig parse_search_config(const std::string& text);

struct SearchHit {
  MPSpec spec;
  Classification cls;
};

struct SearchResult {
  std::string target;
  uint64_t candidates = 0;
  bool exhausted = true; // false when the candidate budget cut the walk short
  std::vector<SearchHit> hits;
};

// Deterministic for a fixed config; hits come out sorted by their serialized
// spec and are re-parsed and re-classified before being reported.
SearchResult run_search(const SearchConfig& cfg);

Report search_report(const SearchResult& res);

} // namespace mpkit
