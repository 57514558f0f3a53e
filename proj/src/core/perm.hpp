#pragma once

#include "error.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mpkit {

// Permutation of {0..k-1} stored as an image vector. Text form is 1-based
// cycle notation, e.g. "(1 2)(3 4)", with "id" for the identity.
struct Perm {
  std::vector<uint32_t> img;

  uint32_t size() const { return static_cast<uint32_t>(img.size()); }
  uint32_t operator()(uint32_t i) const { return img[i]; }
  bool operator==(const Perm& o) const { return img == o.img; }
};

// Validates that img is a bijection on {0..k-1}.
Perm make_perm(std::vector<uint32_t> img);
Perm identity_perm(uint32_t k);

bool is_involution(const Perm& p);
// The transpositions of an involution as (i, j) pairs with i < j, ascending.
std::vector<std::pair<uint32_t, uint32_t>> two_cycles(const Perm& p);
std::vector<uint32_t> fixed_points(const Perm& p);

// All involutions of S_k in lexicographic order of their image vectors.
// Capped at k <= 12.
std::vector<Perm> enumerate_involutions(uint32_t k);

// Number of involutions of S_k (including the identity), computed exactly;
// out of range once the value no longer fits in 64 bits.
uint64_t involution_count(uint32_t k);

std::string format_perm(const Perm& p);
Perm parse_perm(const std::string& text, uint32_t k);

} // namespace mpkit
