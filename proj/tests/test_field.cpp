#include "core/field.hpp"

#include "doctest.h"

using namespace mpkit;

namespace {

// x = a + b*p + ... as canonical integers; GF(4) is {0, 1, w, w^2} = {0,1,2,3}
// with modulus x^2+x+1, GF(9) is a+3b with modulus x^2+1 (b the coefficient
// of a square root of -1).

void check_axioms(const FieldPtr& f) {
  uint32_t n = f->order();
  for (uint32_t a = 0; a < n; ++a) {
    CHECK(f->add(a, 0) == a);
    CHECK(f->mul(a, 1) == a);
    CHECK(f->add(a, f->neg(a)) == 0);
    if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
    for (uint32_t b = 0; b < n; ++b) {
      CHECK(f->add(a, b) == f->add(b, a));
      CHECK(f->mul(a, b) == f->mul(b, a));
      for (uint32_t c = 0; c < n; ++c) {
        CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
        CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
        CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      }
    }
  }
}

void check_conjugation(const FieldPtr& f) {
  uint32_t n = f->order(), q = f->q();
  uint32_t fixed = 0;
  for (uint32_t a = 0; a < n; ++a) {
    CHECK(f->conj(a) == f->pow(a, q));
    CHECK(f->conj(f->conj(a)) == a);
    if (f->conj(a) == a) ++fixed;
    for (uint32_t b = 0; b < n; ++b) {
      CHECK(f->conj(f->add(a, b)) == f->add(f->conj(a), f->conj(b)));
      CHECK(f->conj(f->mul(a, b)) == f->mul(f->conj(a), f->conj(b)));
    }
  }
  CHECK(fixed == q); // the fixed field is GF(q)
}

} // namespace

TEST_CASE("gf4 arithmetic against hand values") {
  FieldPtr f = make_field(2, 2);
  CHECK(f->order() == 4);
  CHECK(f->q() == 2);
  CHECK(f->modulus() == std::vector<uint32_t>{1, 1, 1});

  CHECK(f->add(1, 1) == 0);
  CHECK(f->add(2, 3) == 1);  // w + w^2 = 1
  CHECK(f->mul(2, 2) == 3);  // w * w = w^2
  CHECK(f->mul(2, 3) == 1);  // w * w^2 = 1
  CHECK(f->inv(2) == 3);
  CHECK(f->inv(3) == 2);
  CHECK(f->neg(2) == 2); // characteristic two
  CHECK(f->conj(2) == 3);
  CHECK(f->conj(3) == 2);
  CHECK(f->conj(1) == 1);
  CHECK(f->pow(2, 3) == 1);
  CHECK(f->pow(0, 0) == 1);
  CHECK(f->generator() == 2);
}

TEST_CASE("gf9 arithmetic against hand values") {
  FieldPtr f = make_field(3, 2);
  CHECK(f->order() == 9);
  CHECK(f->q() == 3);
  CHECK(f->modulus() == std::vector<uint32_t>{1, 0, 1}); // x^2 + 1

  CHECK(f->add(1, 2) == 0);  // characteristic three
  CHECK(f->mul(3, 3) == 2);  // i * i = -1 = 2
  CHECK(f->inv(3) == 6);     // i * (-i) = 1
  CHECK(f->conj(3) == 6);    // i^3 = -i
  CHECK(f->neg(3) == 6);
  CHECK(f->add(3, 6) == 0);
  CHECK(f->mul(4, 4) == 6);  // (1+i)^2 = 2i
  CHECK(f->pow(f->generator(), 8) == 1);
}

TEST_CASE("gf9 squares by direct polynomial arithmetic") {
  // (a + bi)^2 = a^2 - b^2 + 2ab i, encoded as (a^2 - b^2) + 3*(2ab)
  FieldPtr f = make_field(3, 2);
  for (uint32_t a = 0; a < 3; ++a)
    for (uint32_t b = 0; b < 3; ++b) {
      uint32_t x = a + 3 * b;
      uint32_t re = (a * a + 2 * (b * b)) % 3; // a^2 - b^2 mod 3
      uint32_t im = (2 * a * b) % 3;
      CHECK(f->mul(x, x) == re + 3 * im);
    }
}

TEST_CASE("field axioms hold exhaustively") {
  check_axioms(make_field(2, 2));
  check_axioms(make_field(3, 2));
  check_axioms(make_field(5, 1));
}

TEST_CASE("conjugation is the order-two automorphism") {
  check_conjugation(make_field(2, 2));
  check_conjugation(make_field(3, 2));
  check_conjugation(make_field(2, 4)); // GF(16) over GF(4)
}

TEST_CASE("default moduli are the smallest canonical irreducibles") {
  CHECK(make_field(2, 2)->modulus() == std::vector<uint32_t>{1, 1, 1});
  CHECK(make_field(3, 2)->modulus() == std::vector<uint32_t>{1, 0, 1});
  CHECK(make_field(2, 4)->modulus() == std::vector<uint32_t>{1, 1, 0, 0, 1});
}

TEST_CASE("an explicit modulus changes the encoding but not the axioms") {
  // x^2 + x + 2 is irreducible over F_3
  FieldPtr f = make_field(3, 2, {2, 1, 1});
  check_axioms(f);
  check_conjugation(f);
}

TEST_CASE("field construction rejects bad input") {
  CHECK_THROWS_AS(make_field(4, 1), error);
  CHECK_THROWS_AS(make_field(2, 0), error);
  CHECK_THROWS_AS(make_field(2, 2, {1, 1, 1, 1}), error); // degree 3 poly for m=2
  CHECK_THROWS_AS(make_field(2, 2, {0, 0, 1}), error);    // x^2 is reducible
  CHECK_THROWS_AS(make_field(2, 17), error);              // order above 2^16

  try {
    make_field(4, 1);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.kind() == errc::out_of_range);
  }
}

TEST_CASE("odd-degree fields have no conjugation") {
  FieldPtr f = make_field(5, 1);
  CHECK(!f->has_conjugation());
  CHECK_THROWS_AS(f->conj(2), error);
  try {
    f->conj(2);
  } catch (const error& e) {
    CHECK(e.kind() == errc::inapplicable);
  }
}

TEST_CASE("division by zero is refused") {
  FieldPtr f = make_field(2, 2);
  CHECK_THROWS_AS(f->inv(0), error);
  try {
    f->inv(0);
  } catch (const error& e) {
    CHECK(e.kind() == errc::division_by_zero);
  }
}

TEST_CASE("irreducibility test on known polynomials") {
  CHECK(poly_irreducible(2, {1, 1, 1}));
  CHECK(!poly_irreducible(2, {1, 0, 1}));    // x^2+1 = (x+1)^2 over F_2
  CHECK(poly_irreducible(3, {1, 0, 1}));     // x^2+1 over F_3
  CHECK(!poly_irreducible(3, {2, 0, 1}));    // x^2+2 = (x+1)(x+2) over F_3
  CHECK(poly_irreducible(2, {1, 1, 0, 0, 1}));
}

TEST_CASE("same_field is structural") {
  CHECK(same_field(make_field(2, 2), make_field(2, 2)));
  CHECK(!same_field(make_field(2, 2), make_field(3, 2)));
  CHECK(!same_field(make_field(3, 2), make_field(3, 2, {2, 1, 1})));
}
