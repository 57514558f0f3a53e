#pragma once

#include "error.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace mpkit {

// A finite field GF(p^m) with p^m <= 2^16, built from an explicit monic
// irreducible modulus over F_p. Elements are canonical integers
// e = sum coeffs[i] * p^i for the coefficient vector of the representative
// polynomial, so 0 <= e < p^m and scalar elements coincide with 0..p-1.
//
// All arithmetic is table-driven after construction: exp/log over a fixed
// generator for multiplication, digitwise tables for addition. Instances are
// immutable and shared through FieldPtr.
class FieldSpec {
public:
  // modulus holds m+1 coefficients, constant term first, leading coefficient 1.
  FieldSpec(uint32_t p, uint32_t m, std::vector<uint32_t> modulus);

  uint32_t p() const { return p_; }
  uint32_t m() const { return m_; }
  uint32_t order() const { return order_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  // p^(m/2), the conjugation exponent. Only meaningful when m is even.
  uint32_t q() const { return q_; }
  bool has_conjugation() const { return m_ % 2 == 0; }

  uint32_t add(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (!addtab_.empty()) return addtab_[a * order_ + b];
    return add_slow(a, b);
  }
  uint32_t neg(uint32_t a) const { return neg_[a]; }
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  uint32_t inv(uint32_t a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of zero");
    return inv_[a];
  }
  // x^e with the convention pow(0, 0) = 1.
  uint32_t pow(uint32_t a, uint64_t e) const;
  // x -> x^q, the order-two automorphism of GF(q^2) over GF(q).
  uint32_t conj(uint32_t a) const {
    if (!has_conjugation()) fail(errc::inapplicable, "conjugation needs even extension degree");
    return conj_[a];
  }

  // A fixed multiplicative generator (the least one as a canonical integer).
  uint32_t generator() const { return gen_; }

  void check_element(uint32_t a) const {
    if (a >= order_) fail(errc::out_of_range, "element value out of field range");
  }

private:
  uint32_t add_slow(uint32_t a, uint32_t b) const;

  uint32_t p_, m_, order_, q_, gen_;
  std::vector<uint32_t> modulus_;
  std::vector<uint32_t> exp_;    // size 2*(order-1): generator powers, doubled to skip a mod
  std::vector<uint32_t> log_;    // size order, defined for nonzero arguments
  std::vector<uint32_t> inv_;    // size order, inv_[0] unused
  std::vector<uint32_t> neg_;    // size order
  std::vector<uint32_t> conj_;   // size order when m even, else empty
  std::vector<uint32_t> addtab_; // order*order when order <= 256 and p odd
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

// Build GF(p^m) with an explicit modulus (validated for irreducibility), or
// with the default modulus: the monic irreducible of degree m whose canonical
// integer is smallest. For GF(4) that is x^2+x+1, for GF(9) x^2+1, for GF(16)
// x^4+x+1.
FieldPtr make_field(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus);
FieldPtr make_field(uint32_t p, uint32_t m);

// Structural equality: same characteristic, degree and modulus.
bool same_field(const FieldPtr& a, const FieldPtr& b);

// True if the monic polynomial (constant term first) is irreducible over F_p.
bool poly_irreducible(uint32_t p, const std::vector<uint32_t>& poly);

} // namespace mpkit
