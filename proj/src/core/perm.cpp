#include "perm.hpp"

#include <algorithm>
#include <sstream>

namespace mpkit {

Perm make_perm(std::vector<uint32_t> img) {
  std::vector<bool> seen(img.size(), false);
  for (uint32_t v : img) {
    if (v >= img.size() || seen[v]) fail(errc::out_of_range, "image vector is not a permutation");
    seen[v] = true;
  }
  return Perm{std::move(img)};
}

Perm identity_perm(uint32_t k) {
  Perm p;
  p.img.resize(k);
  for (uint32_t i = 0; i < k; ++i) p.img[i] = i;
  return p;
}

bool is_involution(const Perm& p) {
  for (uint32_t i = 0; i < p.size(); ++i)
    if (p(p(i)) != i) return false;
  return true;
}

std::vector<std::pair<uint32_t, uint32_t>> two_cycles(const Perm& p) {
  if (!is_involution(p)) fail(errc::not_involution, "permutation is not an involution");
  std::vector<std::pair<uint32_t, uint32_t>> out;
  for (uint32_t i = 0; i < p.size(); ++i)
    if (p(i) > i) out.emplace_back(i, p(i));
  return out;
}

std::vector<uint32_t> fixed_points(const Perm& p) {
  std::vector<uint32_t> out;
  for (uint32_t i = 0; i < p.size(); ++i)
    if (p(i) == i) out.push_back(i);
  return out;
}

namespace {

void involutions_rec(std::vector<uint32_t>& img, std::vector<bool>& used, uint32_t k,
                     std::vector<Perm>& out) {
  uint32_t i = 0;
  while (i < k && used[i]) ++i;
  if (i == k) {
    out.push_back(Perm{img});
    return;
  }
  // Candidates in ascending order keep the image vectors lexicographic:
  // either i is fixed, or it pairs with a later unused point.
  used[i] = true;
  img[i] = i;
  involutions_rec(img, used, k, out);
  for (uint32_t j = i + 1; j < k; ++j) {
    if (used[j]) continue;
    used[j] = true;
    img[i] = j;
    img[j] = i;
    involutions_rec(img, used, k, out);
    used[j] = false;
  }
  used[i] = false;
}

} // namespace

std::vector<Perm> enumerate_involutions(uint32_t k) {
  if (k > 12) fail(errc::cap_exceeded, "involution enumeration capped at k <= 12");
  std::vector<uint32_t> img(k, 0);
  std::vector<bool> used(k, false);
  std::vector<Perm> out;
  if (k == 0) {
    out.push_back(Perm{});
    return out;
  }
  involutions_rec(img, used, k, out);
  return out;
}

uint64_t involution_count(uint32_t k) {
  // t(n) = t(n-1) + (n-1) t(n-2), the number of self-inverse permutations.
  uint64_t prev2 = 1, prev1 = 1; // t(0), t(1)
  if (k == 0) return 1;
  if (k == 1) return 1;
  for (uint32_t n = 2; n <= k; ++n) {
    uint64_t term, cur;
    if (__builtin_mul_overflow(static_cast<uint64_t>(n - 1), prev2, &term) ||
        __builtin_add_overflow(prev1, term, &cur))
      fail(errc::out_of_range, "involution count exceeds 64 bits");
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

std::string format_perm(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::ostringstream os;
  bool any = false;
  for (uint32_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p(i) == i) continue;
    os << '(';
    uint32_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << ' ';
      os << (j + 1);
      first = false;
      j = p(j);
    }
    os << ')';
    any = true;
  }
  return any ? os.str() : "id";
}

Perm parse_perm(const std::string& text, uint32_t k) {
  size_t a = text.find_first_not_of(" \t\r\n");
  size_t b = text.find_last_not_of(" \t\r\n");
  std::string s = (a == std::string::npos) ? "" : text.substr(a, b - a + 1);

  std::vector<uint32_t> img(k);
  for (uint32_t i = 0; i < k; ++i) img[i] = i;
  if (s == "id" || s.empty()) return Perm{img};

  std::vector<bool> mentioned(k, false);
  size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == s.size()) break;
    if (s[pos] != '(') fail(errc::parse_error, "expected '(' in cycle notation");
    size_t close = s.find(')', pos);
    if (close == std::string::npos) fail(errc::parse_error, "unbalanced cycle");
    std::istringstream cyc(s.substr(pos + 1, close - pos - 1));
    std::vector<uint32_t> pts;
    long v;
    while (cyc >> v) {
      if (v < 1 || static_cast<uint64_t>(v) > k) fail(errc::out_of_range, "cycle point out of range");
      uint32_t u = static_cast<uint32_t>(v - 1);
      if (mentioned[u]) fail(errc::parse_error, "point repeated across cycles");
      mentioned[u] = true;
      pts.push_back(u);
    }
    if (!cyc.eof()) fail(errc::parse_error, "bad cycle contents");
    if (pts.size() < 2) fail(errc::parse_error, "cycles need at least two points");
    for (size_t i = 0; i < pts.size(); ++i) img[pts[i]] = pts[(i + 1) % pts.size()];
    pos = close + 1;
  }
  return make_perm(std::move(img));
}

} // namespace mpkit
