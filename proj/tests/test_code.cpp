#include "core/code.hpp"
#include "core/corpus.hpp"

#include "doctest.h"

using namespace mpkit;

namespace {

FieldPtr f4() { return make_field(2, 2); }
FieldPtr f9() { return make_field(3, 2); }

LinearCode span1(const FieldPtr& f, std::vector<uint32_t> v) {
  uint32_t n = static_cast<uint32_t>(v.size());
  return make_code(Matrix(f, 1, n, std::move(v)));
}

} // namespace

TEST_CASE("codes are canonical: any spanning set gives the same object") {
  Matrix a(f4(), 2, 3, {1, 1, 0, 0, 1, 2});
  Matrix b(f4(), 3, 3, {1, 0, 2, 0, 1, 2, 1, 1, 0}); // row3 = row1 + row2, reordered span
  LinearCode ca = make_code(a);
  LinearCode cb = make_code(b);
  CHECK(ca.dim() == 2);
  CHECK(cb.dim() == 2);
  CHECK(ca == cb);
  CHECK(ca.generator() == rref(a));

  CHECK(zero_code(f4(), 3).dim() == 0);
  CHECK(universe_code(f4(), 3).dim() == 3);
  CHECK(make_code(Matrix(f4(), 2, 3)) == zero_code(f4(), 3));
}

TEST_CASE("euclidean and hermitian duals") {
  // <u,v>_H = sum u_i v_i^q; the span of (1,1) over GF(4) is Hermitian
  // self-dual
  LinearCode c = span1(f4(), {1, 1});
  CHECK(hermitian_dual(c) == c);
  CHECK(is_hermitian_self_orthogonal(c));
  CHECK(is_hermitian_dual_containing(c));

  // over GF(9) the span of (1,i) is not: <(1,i),(1,i)> = 1 + i*i^3 = 1 - i^2 = 2
  LinearCode d = span1(f9(), {1, 3});
  CHECK(hermitian_dual(d) != d);
  CHECK(!is_hermitian_self_orthogonal(d));
  CHECK(hermitian_hull_dim(d) == 0);

  // euclidean: (1,i) pairs to zero with itself since 1 + i^2 = 0
  LinearCode e = span1(f9(), {1, 3});
  CHECK(euclidean_dual(e) == e);
}

TEST_CASE("dual dimensions and double duals") {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const FieldPtr f = trial % 2 ? f9() : f4();
    uint32_t n = 1 + rng.uniform(5);
    LinearCode c = random_code(rng, f, n, rng.uniform(n + 1));
    LinearCode dual = hermitian_dual(c);
    CHECK(c.dim() + dual.dim() == n);
    CHECK(hermitian_dual(dual) == c);
    CHECK(euclidean_dual(euclidean_dual(c)) == c);
  }
}

TEST_CASE("sum, intersection and the modular law") {
  LinearCode a = span1(f4(), {1, 0, 0});
  LinearCode b = span1(f4(), {0, 1, 0});
  LinearCode s = sum_codes(a, b);
  CHECK(s.dim() == 2);
  CHECK(contains(s, a));
  CHECK(contains(s, b));
  CHECK(intersect(a, b) == zero_code(f4(), 3));

  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const FieldPtr f = trial % 2 ? f9() : f4();
    uint32_t n = 1 + rng.uniform(5);
    LinearCode c1 = random_code(rng, f, n, rng.uniform(n + 1));
    LinearCode c2 = random_code(rng, f, n, rng.uniform(n + 1));
    LinearCode meet = intersect(c1, c2);
    LinearCode join = sum_codes(c1, c2);
    CHECK(c1.dim() + c2.dim() == meet.dim() + join.dim());
    CHECK(contains(c1, meet));
    CHECK(contains(join, c2));
  }
}

TEST_CASE("meet-with-dual dimension shortcut equals the literal intersection") {
  // exhaustive over all pairs of codes of length 2 over GF(4)
  auto pool = enumerate_all_codes(f4(), 2);
  REQUIRE(pool.size() == 7); // 1 + 5 + 1 subspaces
  for (const auto& c1 : pool)
    for (const auto& c2 : pool) {
      uint32_t direct = intersect(c1, hermitian_dual(c2)).dim();
      CHECK(direct == meet_hermitian_dual_dim(c1, c2));
    }
  for (const auto& c : pool) {
    CHECK(hermitian_hull_dim(c) == intersect(c, hermitian_dual(c)).dim());
    CHECK(hermitian_hull(c).dim() == hermitian_hull_dim(c));
  }
}

TEST_CASE("minimum distance by enumeration") {
  CHECK(min_distance(span1(f4(), {1, 1})).value == 2);
  CHECK(min_distance(universe_code(f4(), 3)).value == 1);
  CHECK(min_distance(span1(f9(), {1, 3, 4})).value == 3);

  // the [3,2] code <(1,0,1),(0,1,w)> has a weight-2 word but none of weight 1
  LinearCode c = make_code(Matrix(f4(), 2, 3, {1, 0, 1, 0, 1, 2}));
  CHECK(min_distance(c).value == 2);

  DistanceResult z = min_distance(zero_code(f4(), 4));
  CHECK(z.zero_code);
  CHECK(z.value == 5); // sentinel: length + 1

  CHECK_THROWS_AS(min_distance(c, 2), error);
  try {
    min_distance(c, 2);
  } catch (const error& e) {
    CHECK(e.kind() == errc::cap_exceeded);
  }
}

TEST_CASE("codes over mismatched fields cannot be combined") {
  CHECK_THROWS_AS(sum_codes(span1(f4(), {1, 1}), span1(f9(), {1, 1})), error);
  CHECK_THROWS_AS(intersect(span1(f4(), {1, 1}), span1(f4(), {1, 1, 0})), error);
}
