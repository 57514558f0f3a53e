#include "oracle.hpp"

#include <algorithm>
#include <numeric>

namespace mpkit {

namespace {

uint64_t checked_power(uint64_t base, uint32_t exp, uint64_t cap, const char* what) {
  uint64_t v = 1;
  for (uint32_t i = 0; i < exp; ++i) {
    v *= base;
    if (v > cap) fail(errc::cap_exceeded, what);
  }
  return v;
}

uint64_t encode_word(const std::vector<uint32_t>& w, uint64_t base) {
  uint64_t key = 0;
  for (size_t i = w.size(); i-- > 0;) key = key * base + w[i];
  return key;
}

// Word keys live in a u64, which bounds the lengths these scans accept.
void check_keyable(uint32_t cols, uint64_t base) {
  uint64_t v = 1;
  for (uint32_t i = 0; i < cols; ++i) {
    if (v > (~0ull) / base) fail(errc::cap_exceeded, "words too long to key");
    v *= base;
  }
}

// log_base of an exact power; anything else is a bug in the caller's count.
uint32_t exact_log(uint64_t count, uint64_t base) {
  uint32_t d = 0;
  while (count > 1) {
    if (count % base != 0) fail(errc::internal, "word count is not a power of the field order");
    count /= base;
    ++d;
  }
  return d;
}

bool hermitian_orthogonal_to_rows(const FieldSpec& F, const Matrix& rows,
                                  const std::vector<uint32_t>& w) {
  for (uint32_t r = 0; r < rows.rows(); ++r) {
    uint32_t acc = 0;
    for (uint32_t j = 0; j < rows.cols(); ++j) acc = F.add(acc, F.mul(rows(r, j), F.conj(w[j])));
    if (acc) return false;
  }
  return true;
}

std::vector<uint64_t> distinct_keys(const std::vector<std::vector<uint32_t>>& words,
                                    uint64_t base) {
  std::vector<uint64_t> keys;
  keys.reserve(words.size());
  for (const auto& w : words) keys.push_back(encode_word(w, base));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

} // namespace

std::vector<std::vector<uint32_t>> enumerate_codewords(const Matrix& gen, uint64_t cap) {
  const FieldSpec& F = *gen.field();
  uint64_t total = checked_power(F.order(), gen.rows(), cap, "message space exceeds cap");
  std::vector<std::vector<uint32_t>> out;
  out.reserve(total);
  std::vector<uint32_t> msg(gen.rows(), 0);
  for (uint64_t counter = 0; counter < total; ++counter) {
    uint64_t v = counter;
    for (uint32_t i = 0; i < gen.rows(); ++i) {
      msg[i] = static_cast<uint32_t>(v % F.order());
      v /= F.order();
    }
    std::vector<uint32_t> w(gen.cols(), 0);
    for (uint32_t i = 0; i < gen.rows(); ++i) {
      if (!msg[i]) continue;
      for (uint32_t j = 0; j < gen.cols(); ++j) w[j] = F.add(w[j], F.mul(msg[i], gen(i, j)));
    }
    out.push_back(std::move(w));
  }
  return out;
}

uint32_t brute_code_dim(const Matrix& gen, uint64_t cap) {
  check_keyable(gen.cols(), gen.field()->order());
  return exact_log(distinct_keys(enumerate_codewords(gen, cap), gen.field()->order()).size(),
                   gen.field()->order());
}

uint32_t brute_hermitian_dual_dim(const Matrix& gen, uint64_t cap) {
  const FieldSpec& F = *gen.field();
  uint64_t total = checked_power(F.order(), gen.cols(), cap, "ambient space exceeds cap");
  uint64_t count = 0;
  std::vector<uint32_t> w(gen.cols(), 0);
  for (uint64_t counter = 0; counter < total; ++counter) {
    uint64_t v = counter;
    for (uint32_t j = 0; j < gen.cols(); ++j) {
      w[j] = static_cast<uint32_t>(v % F.order());
      v /= F.order();
    }
    if (hermitian_orthogonal_to_rows(F, gen, w)) ++count;
  }
  return exact_log(count, F.order());
}

uint32_t brute_hull_dim(const Matrix& gen, uint64_t cap) {
  const FieldSpec& F = *gen.field();
  check_keyable(gen.cols(), F.order());
  auto words = enumerate_codewords(gen, cap);
  std::vector<uint64_t> hull_keys;
  for (const auto& w : words)
    if (hermitian_orthogonal_to_rows(F, gen, w)) hull_keys.push_back(encode_word(w, F.order()));
  std::sort(hull_keys.begin(), hull_keys.end());
  hull_keys.erase(std::unique(hull_keys.begin(), hull_keys.end()), hull_keys.end());
  return exact_log(hull_keys.size(), F.order());
}

DistanceResult brute_min_distance(const Matrix& gen, uint64_t cap) {
  auto words = enumerate_codewords(gen, cap);
  uint32_t best = gen.cols() + 1;
  for (const auto& w : words) {
    uint32_t wt = 0;
    for (uint32_t v : w)
      if (v) ++wt;
    if (wt > 0 && wt < best) best = wt;
  }
  return {best, best == gen.cols() + 1};
}

BruteFlags brute_classify(const Matrix& gen, uint64_t cap) {
  const FieldSpec& F = *gen.field();
  uint64_t Q = F.order();
  uint32_t n = gen.cols();
  check_keyable(n, Q);
  auto code_keys = distinct_keys(enumerate_codewords(gen, cap), Q);

  BruteFlags f;
  f.dim = exact_log(code_keys.size(), Q);

  uint64_t ambient = 1;
  bool ambient_fits = true;
  for (uint32_t j = 0; j < n; ++j) {
    ambient *= Q;
    if (ambient > cap) {
      ambient_fits = false;
      break;
    }
  }

  if (ambient_fits) {
    // Literal subset tests on explicit word sets.
    std::vector<uint64_t> dual_keys;
    std::vector<uint32_t> w(n, 0);
    for (uint64_t counter = 0; counter < ambient; ++counter) {
      uint64_t v = counter;
      for (uint32_t j = 0; j < n; ++j) {
        w[j] = static_cast<uint32_t>(v % Q);
        v /= Q;
      }
      if (hermitian_orthogonal_to_rows(F, gen, w)) dual_keys.push_back(encode_word(w, Q));
    }
    std::sort(dual_keys.begin(), dual_keys.end());
    f.dual_dim = exact_log(dual_keys.size(), Q);
    std::vector<uint64_t> meet;
    std::set_intersection(code_keys.begin(), code_keys.end(), dual_keys.begin(), dual_keys.end(),
                          std::back_inserter(meet));
    f.hull_dim = exact_log(meet.size(), Q);
    f.hdc = std::includes(code_keys.begin(), code_keys.end(), dual_keys.begin(), dual_keys.end());
    f.hso = std::includes(dual_keys.begin(), dual_keys.end(), code_keys.begin(), code_keys.end());
    f.by_word_sets = true;
  } else {
    f.dual_dim = n - f.dim;
    f.hull_dim = brute_hull_dim(gen, cap);
    f.hdc = f.hull_dim == f.dual_dim;
    f.hso = f.hull_dim == f.dim;
  }
  f.ahdc = static_cast<int64_t>(f.hull_dim) == static_cast<int64_t>(f.dual_dim) - 1;
  f.ahso = static_cast<int64_t>(f.hull_dim) == static_cast<int64_t>(f.dim) - 1;
  f.hlcd = f.hull_dim == 0;
  return f;
}

std::vector<std::vector<uint32_t>> enumerate_mp_words(const MPSpec& s, uint64_t cap) {
  const FieldSpec& F = *s.a.field();
  uint64_t Q = F.order();
  uint64_t total = checked_power(Q, s.dim_sum(), cap, "message tuple space exceeds cap");
  uint32_t n = s.inner_length(), l = s.blocks(), k = s.k();

  std::vector<std::vector<uint32_t>> out;
  out.reserve(total);
  std::vector<std::vector<uint32_t>> c(k, std::vector<uint32_t>(n));
  for (uint64_t counter = 0; counter < total; ++counter) {
    uint64_t v = counter;
    for (uint32_t i = 0; i < k; ++i) {
      const Matrix& g = s.codes[i].generator();
      std::fill(c[i].begin(), c[i].end(), 0);
      for (uint32_t r = 0; r < g.rows(); ++r) {
        uint32_t coef = static_cast<uint32_t>(v % Q);
        v /= Q;
        if (!coef) continue;
        for (uint32_t j = 0; j < n; ++j) c[i][j] = F.add(c[i][j], F.mul(coef, g(r, j)));
      }
    }
    std::vector<uint32_t> w(static_cast<size_t>(l) * n, 0);
    for (uint32_t b = 0; b < l; ++b)
      for (uint32_t i = 0; i < k; ++i) {
        uint32_t aij = s.a(i, b);
        if (!aij) continue;
        for (uint32_t j = 0; j < n; ++j)
          w[b * n + j] = F.add(w[b * n + j], F.mul(aij, c[i][j]));
      }
    out.push_back(std::move(w));
  }
  return out;
}

Matrix mp_unit_words(const MPSpec& s) {
  const FieldSpec& F = *s.a.field();
  uint32_t n = s.inner_length(), l = s.blocks();
  Matrix u(s.a.field(), s.dim_sum(), static_cast<uint32_t>(l) * n);
  uint32_t row_out = 0;
  for (uint32_t i = 0; i < s.k(); ++i) {
    const Matrix& g = s.codes[i].generator();
    for (uint32_t r = 0; r < g.rows(); ++r, ++row_out)
      for (uint32_t b = 0; b < l; ++b) {
        uint32_t aib = s.a(i, b);
        if (!aib) continue;
        for (uint32_t j = 0; j < n; ++j) u(row_out, b * n + j) = F.mul(aib, g(r, j));
      }
  }
  return u;
}

uint32_t brute_mp_hull_dim(const MPSpec& s, uint64_t cap) {
  const FieldSpec& F = *s.a.field();
  check_keyable(s.length(), F.order());
  Matrix units = mp_unit_words(s);
  auto words = enumerate_mp_words(s, cap);
  std::vector<uint64_t> hull_keys;
  for (const auto& w : words)
    if (hermitian_orthogonal_to_rows(F, units, w)) hull_keys.push_back(encode_word(w, F.order()));
  std::sort(hull_keys.begin(), hull_keys.end());
  hull_keys.erase(std::unique(hull_keys.begin(), hull_keys.end()), hull_keys.end());
  return exact_log(hull_keys.size(), F.order());
}

BruteFlags brute_mp_classify(const MPSpec& s, uint64_t cap) {
  return brute_classify(mp_unit_words(s), cap);
}

uint64_t brute_involution_count(uint32_t k) {
  if (k > 8) fail(errc::cap_exceeded, "full permutation scan capped at k <= 8");
  std::vector<uint32_t> img(k);
  std::iota(img.begin(), img.end(), 0);
  uint64_t count = 0;
  do {
    bool inv = true;
    for (uint32_t i = 0; i < k && inv; ++i) inv = img[img[i]] == i;
    if (inv) ++count;
  } while (std::next_permutation(img.begin(), img.end()));
  return count;
}

} // namespace mpkit
