#include "core/corpus.hpp"

#include "core/io.hpp"
#include "core/monomial.hpp"
#include "core/oracle.hpp"

#include "doctest.h"

#include <set>

using namespace mpkit;

namespace {
FieldPtr f4() { return make_field(2, 2); }
FieldPtr f9() { return make_field(3, 2); }
} // namespace

TEST_CASE("rng streams are reproducible and in range") {
  Rng a(42), b(42);
  for (int i = 0; i < 200; ++i) CHECK(a.next() == b.next());
  Rng r(7);
  for (int i = 0; i < 500; ++i) {
    CHECK(r.uniform(10) < 10);
    uint32_t z = r.nonzero(*f9());
    CHECK(z >= 1);
    CHECK(z < 9);
  }
  CHECK(r.uniform(1) == 0);
  CHECK_THROWS_AS(r.uniform(0), error);
}

TEST_CASE("random codes come out with the requested dimension") {
  Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    uint32_t n = 1 + rng.uniform(5);
    uint32_t t = rng.uniform(n + 1);
    LinearCode c = random_code(rng, i % 2 ? f4() : f9(), n, t);
    CHECK(c.dim() == t);
    CHECK(c.length() == n);
  }
}

TEST_CASE("random monomial matrices decompose, unit ones have identity gram") {
  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    FieldPtr f = i % 2 ? f9() : f4();
    uint32_t k = 1 + rng.uniform(4);
    Matrix m = random_monomial_matrix(rng, f, k);
    CHECK(is_monomial(m));
    Matrix u = random_unit_monomial_matrix(rng, f, k);
    CHECK(is_monomial(u));
    CHECK(gram_hermitian(u) == identity(f, k));
  }
}

TEST_CASE("constructed defining matrices have monomial hermitian gram") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    FieldPtr f = i % 2 ? f9() : f4();
    uint32_t k = 1 + rng.uniform(4);
    uint32_t l = k + (i % 3 == 0 ? 1 : 0);
    Matrix a = random_gram_monomial_defining(rng, f, k, l);
    CHECK(a.rows() == k);
    CHECK(a.cols() == l);
    CHECK(is_monomial(gram_hermitian(a)));
    CHECK(rank(a) == k);
  }
}

TEST_CASE("code enumeration counts match the gaussian binomials") {
  CHECK(enumerate_codes(f4(), 2, 1).size() == 5);   // (4^2-1)/(4-1)
  CHECK(enumerate_all_codes(f4(), 2).size() == 7);  // 1 + 5 + 1
  CHECK(enumerate_codes(f4(), 3, 1).size() == 21);  // (4^3-1)/3
  CHECK(enumerate_codes(f4(), 4, 2).size() == 357); // [4 choose 2]_4
  CHECK(enumerate_codes(f9(), 2, 1).size() == 10);  // (9^2-1)/8

  auto all = enumerate_codes(f4(), 3, 2);
  CHECK(all.size() == 21);
  std::set<std::string> gens;
  for (const auto& c : all) {
    CHECK(c.dim() == 2);
    CHECK(c.length() == 3);
    gens.insert(format_matrix(c.generator()));
  }
  CHECK(gens.size() == all.size()); // all distinct

  CHECK_THROWS_AS(enumerate_codes(f9(), 8, 4, 1000), error); // 9^16 candidates
}

TEST_CASE("sampled corpus is deterministic and within its envelope") {
  auto batch = sample_corpus(99, 24);
  auto again = sample_corpus(99, 24);
  REQUIRE(batch.size() == 24);
  REQUIRE(again.size() == 24);
  for (size_t i = 0; i < batch.size(); ++i)
    CHECK(format_mpspec(batch[i]) == format_mpspec(again[i]));

  for (size_t i = 0; i < batch.size(); ++i) {
    const MPSpec& s = batch[i];
    CHECK(s.a.field()->p() == (i % 2 == 0 ? 2u : 3u));
    CHECK(is_monomial(gram_hermitian(s.a)));
    if (i % 8 == 7)
      CHECK(s.blocks() == s.k() + 1);
    else
      CHECK(s.blocks() == s.k());
    // word scans over the built code must stay feasible
    CHECK(s.dim_sum() <= (s.a.field()->order() == 4 ? 8u : 5u));
  }

  CHECK(sample_corpus(100, 4)[0].k() >= 2);
}
