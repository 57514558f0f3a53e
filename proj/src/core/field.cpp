#include "field.hpp"

#include <algorithm>
#include <numeric>

namespace mpkit {

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense coefficient vectors over F_p, constant term first. The zero
// polynomial is the empty vector; otherwise the last coefficient is nonzero.
using Poly = std::vector<uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_from_int(uint32_t p, uint64_t v) {
  Poly out;
  while (v) {
    out.push_back(static_cast<uint32_t>(v % p));
    v /= p;
  }
  return out;
}

uint32_t poly_to_int(uint32_t p, const Poly& a) {
  uint64_t v = 0;
  for (size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return static_cast<uint32_t>(v);
}

Poly poly_mul(uint32_t p, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  trim(out);
  return out;
}

// a mod b with b monic.
Poly poly_mod(uint32_t p, Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    uint32_t lead = a.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      uint32_t t = (lead * b[i]) % p;
      a[shift + i] = (a[shift + i] + p - t) % p;
    }
    trim(a);
  }
  return a;
}

} // namespace

bool poly_irreducible(uint32_t p, const std::vector<uint32_t>& poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false; // constants are not irreducible
  uint32_t deg = static_cast<uint32_t>(f.size()) - 1;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (uint32_t d = 1; 2 * d <= deg; ++d) {
    uint64_t lowers = 1;
    for (uint32_t i = 0; i < d; ++i) lowers *= p;
    for (uint64_t lo = 0; lo < lowers; ++lo) {
      Poly g = poly_from_int(p, lo);
      g.resize(d + 1, 0);
      g[d] = 1;
      if (poly_mod(p, f, g).empty()) return false;
    }
  }
  return true;
}

FieldSpec::FieldSpec(uint32_t p, uint32_t m, std::vector<uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) fail(errc::out_of_range, "field characteristic must be prime");
  if (m_ == 0) fail(errc::out_of_range, "extension degree must be positive");
  uint64_t order = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    order *= p_;
    if (order > (1u << 16)) fail(errc::cap_exceeded, "field order exceeds 2^16");
  }
  order_ = static_cast<uint32_t>(order);
  q_ = 1;
  if (m_ % 2 == 0)
    for (uint32_t i = 0; i < m_ / 2; ++i) q_ *= p_;

  if (modulus_.size() != m_ + 1) fail(errc::out_of_range, "modulus must have degree m");
  for (uint32_t c : modulus_)
    if (c >= p_) fail(errc::out_of_range, "modulus coefficient out of range");
  if (modulus_.back() != 1) fail(errc::out_of_range, "modulus must be monic");
  if (!poly_irreducible(p_, modulus_)) fail(errc::out_of_range, "modulus must be irreducible");

  // Bootstrap multiplication the slow way, then freeze exp/log tables.
  auto raw_mul = [&](uint32_t a, uint32_t b) {
    Poly prod = poly_mul(p_, poly_from_int(p_, a), poly_from_int(p_, b));
    return poly_to_int(p_, poly_mod(p_, std::move(prod), modulus_));
  };
  auto raw_pow = [&](uint32_t a, uint64_t e) {
    uint32_t acc = 1;
    while (e) {
      if (e & 1) acc = raw_mul(acc, a);
      a = raw_mul(a, a);
      e >>= 1;
    }
    return acc;
  };

  // Least multiplicative generator: order of g equals order-1 iff
  // g^((order-1)/ell) != 1 for every prime ell dividing order-1.
  uint32_t n1 = order_ - 1;
  std::vector<uint32_t> prime_factors;
  {
    uint32_t v = n1;
    for (uint32_t d = 2; d * d <= v; ++d)
      if (v % d == 0) {
        prime_factors.push_back(d);
        while (v % d == 0) v /= d;
      }
    if (v > 1) prime_factors.push_back(v);
  }
  gen_ = 1;
  for (uint32_t g = 1; g < order_; ++g) {
    bool ok = true;
    for (uint32_t ell : prime_factors)
      if (raw_pow(g, n1 / ell) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      gen_ = g;
      break;
    }
  }

  exp_.assign(2 * std::max<uint32_t>(n1, 1), 1);
  log_.assign(order_, 0);
  uint32_t cur = 1;
  for (uint32_t i = 0; i < n1; ++i) {
    exp_[i] = cur;
    exp_[i + n1] = cur;
    log_[cur] = i;
    cur = raw_mul(cur, gen_);
  }

  inv_.assign(order_, 0);
  for (uint32_t a = 1; a < order_; ++a) inv_[a] = exp_[(n1 - log_[a]) % std::max<uint32_t>(n1, 1)];

  neg_.assign(order_, 0);
  for (uint32_t a = 0; a < order_; ++a) {
    Poly d = poly_from_int(p_, a);
    for (uint32_t& c : d) c = (p_ - c) % p_;
    neg_[a] = poly_to_int(p_, d);
  }

  if (m_ % 2 == 0) {
    conj_.assign(order_, 0);
    for (uint32_t a = 1; a < order_; ++a)
      conj_[a] = exp_[static_cast<uint32_t>((static_cast<uint64_t>(log_[a]) * q_) % n1)];
  }

  if (p_ != 2 && order_ <= 256) {
    addtab_.assign(static_cast<size_t>(order_) * order_, 0);
    for (uint32_t a = 0; a < order_; ++a)
      for (uint32_t b = 0; b < order_; ++b) addtab_[a * order_ + b] = add_slow(a, b);
  }
}

uint32_t FieldSpec::add_slow(uint32_t a, uint32_t b) const {
  uint32_t out = 0, place = 1;
  while (a || b) {
    out += place * ((a % p_ + b % p_) % p_);
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

uint32_t FieldSpec::pow(uint32_t a, uint64_t e) const {
  check_element(a);
  if (a == 0) return e == 0 ? 1u : 0u;
  uint32_t n1 = order_ - 1;
  if (n1 == 0) return 1; // GF(2): the only nonzero element is 1
  return exp_[static_cast<uint32_t>((static_cast<uint64_t>(log_[a]) * (e % n1)) % n1)];
}

FieldPtr make_field(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus) {
  return std::make_shared<const FieldSpec>(p, m, modulus);
}

FieldPtr make_field(uint32_t p, uint32_t m) {
  if (!is_prime(p)) fail(errc::out_of_range, "field characteristic must be prime");
  if (m == 0) fail(errc::out_of_range, "extension degree must be positive");
  uint64_t pm = 1;
  for (uint32_t i = 0; i < m; ++i) {
    pm *= p;
    if (pm > (1u << 16)) fail(errc::cap_exceeded, "field order exceeds 2^16");
  }
  // Default modulus: the monic degree-m irreducible whose canonical integer
  // is least, i.e. the one with the lexicographically smallest low part.
  std::vector<uint32_t> cand(m + 1, 0);
  cand[m] = 1;
  for (uint64_t lo = 0; lo < pm; ++lo) {
    uint64_t v = lo;
    for (uint32_t i = 0; i < m; ++i) {
      cand[i] = static_cast<uint32_t>(v % p);
      v /= p;
    }
    if (poly_irreducible(p, cand)) return make_field(p, m, cand);
  }
  fail(errc::internal, "no irreducible modulus found"); // unreachable: fields of every order exist
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  return a->p() == b->p() && a->m() == b->m() && a->modulus() == b->modulus();
}

} // namespace mpkit
