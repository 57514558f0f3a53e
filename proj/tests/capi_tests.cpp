// Exercises the shared library strictly through its C surface.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mpkit.h"

#include <cstring>
#include <memory>
#include <string>

namespace {

struct owned_string {
  char* s = nullptr;
  ~owned_string() { mpkit_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

struct field_handle {
  mpkit_field* h = nullptr;
  ~field_handle() { mpkit_field_free(h); }
};
struct matrix_handle {
  mpkit_matrix* h = nullptr;
  ~matrix_handle() { mpkit_matrix_free(h); }
};
struct code_handle {
  mpkit_code* h = nullptr;
  ~code_handle() { mpkit_code_free(h); }
};
struct spec_handle {
  mpkit_mpspec* h = nullptr;
  ~spec_handle() { mpkit_mpspec_free(h); }
};

mpkit_field* gf4() {
  mpkit_field* f = nullptr;
  REQUIRE(mpkit_field_create(2, 2, nullptr, &f) == MPKIT_OK);
  return f;
}

bool has_line(const std::string& text, const std::string& line) {
  return text.find(line + "\n") != std::string::npos ||
         (text.size() >= line.size() &&
          text.compare(text.size() - line.size(), line.size(), line) == 0);
}

} // namespace

TEST_CASE("version and error strings") {
  REQUIRE(mpkit_version() != nullptr);
  CHECK(std::strlen(mpkit_version()) > 0);
  mpkit_string_free(nullptr); // always safe
}

TEST_CASE("field arithmetic through the c surface") {
  field_handle f{gf4()};
  CHECK(mpkit_field_order(f.h) == 4);
  CHECK(mpkit_field_characteristic(f.h) == 2);
  CHECK(mpkit_field_degree(f.h) == 2);

  uint32_t v = 99;
  CHECK(mpkit_field_add(f.h, 1, 1, &v) == MPKIT_OK);
  CHECK(v == 0);
  CHECK(mpkit_field_mul(f.h, 2, 2, &v) == MPKIT_OK);
  CHECK(v == 3);
  CHECK(mpkit_field_conj(f.h, 2, &v) == MPKIT_OK);
  CHECK(v == 3);
  CHECK(mpkit_field_pow(f.h, 2, 3, &v) == MPKIT_OK);
  CHECK(v == 1);
  CHECK(mpkit_field_neg(f.h, 3, &v) == MPKIT_OK);
  CHECK(v == 3);
  CHECK(mpkit_field_inv(f.h, 2, &v) == MPKIT_OK);
  CHECK(v == 3); // w * (w+1) = 1

  CHECK(mpkit_field_inv(f.h, 0, &v) == MPKIT_ERR_DIVISION_BY_ZERO);
  CHECK(std::strlen(mpkit_last_error()) > 0);
  CHECK(mpkit_field_add(f.h, 7, 0, &v) == MPKIT_ERR_OUT_OF_RANGE);
  CHECK(mpkit_field_add(f.h, 1, 1, nullptr) == MPKIT_ERR_OUT_OF_RANGE);

  owned_string line;
  CHECK(mpkit_field_format(f.h, &line.s) == MPKIT_OK);
  CHECK(line.str() == "field p=2 m=2 modulus=1,1,1");

  mpkit_field* bad = nullptr;
  CHECK(mpkit_field_create(4, 1, nullptr, &bad) == MPKIT_ERR_OUT_OF_RANGE);
  CHECK(bad == nullptr);

  // GF(9) default modulus is x^2 + 1; conjugation there sends 3 to 6
  field_handle f9;
  REQUIRE(mpkit_field_create(3, 2, nullptr, &f9.h) == MPKIT_OK);
  CHECK(mpkit_field_conj(f9.h, 3, &v) == MPKIT_OK);
  CHECK(v == 6);

  // odd extension degree: no conjugation to speak of
  field_handle f8;
  REQUIRE(mpkit_field_create(2, 3, nullptr, &f8.h) == MPKIT_OK);
  CHECK(mpkit_field_conj(f8.h, 1, &v) == MPKIT_ERR_NOT_HERMITIAN);
}

TEST_CASE("matrices through the c surface") {
  field_handle f{gf4()};
  const uint32_t a1[] = {1, 1, 1, 2};
  matrix_handle m;
  REQUIRE(mpkit_matrix_create(f.h, 2, 2, a1, &m.h) == MPKIT_OK);
  CHECK(mpkit_matrix_rows(m.h) == 2);
  CHECK(mpkit_matrix_cols(m.h) == 2);

  uint32_t v = 0;
  CHECK(mpkit_matrix_entry(m.h, 1, 1, &v) == MPKIT_OK);
  CHECK(v == 2);
  CHECK(mpkit_matrix_entry(m.h, 2, 0, &v) == MPKIT_ERR_OUT_OF_RANGE);

  const uint32_t over[] = {7, 0, 0, 0};
  mpkit_matrix* bad = nullptr;
  CHECK(mpkit_matrix_create(f.h, 2, 2, over, &bad) == MPKIT_ERR_OUT_OF_RANGE);
  CHECK(mpkit_matrix_parse("not a matrix", &bad) == MPKIT_ERR_PARSE);

  owned_string text;
  REQUIRE(mpkit_matrix_format(m.h, &text.s) == MPKIT_OK);
  matrix_handle back;
  REQUIRE(mpkit_matrix_parse(text.s, &back.h) == MPKIT_OK);
  owned_string text2;
  REQUIRE(mpkit_matrix_format(back.h, &text2.s) == MPKIT_OK);
  CHECK(text.str() == text2.str());

  CHECK(mpkit_matrix_rank(m.h, &v) == MPKIT_OK);
  CHECK(v == 2);
  CHECK(mpkit_matrix_determinant(m.h, &v) == MPKIT_OK);
  CHECK(v == 3);

  matrix_handle gram;
  REQUIRE(mpkit_matrix_gram_hermitian(m.h, &gram.h) == MPKIT_OK);
  uint32_t g01 = 0, g10 = 0, g00 = 9;
  CHECK(mpkit_matrix_entry(gram.h, 0, 1, &g01) == MPKIT_OK);
  CHECK(mpkit_matrix_entry(gram.h, 1, 0, &g10) == MPKIT_OK);
  CHECK(mpkit_matrix_entry(gram.h, 0, 0, &g00) == MPKIT_OK);
  CHECK(g01 == 2);
  CHECK(g10 == 3);
  CHECK(g00 == 0);

  int flag = 0;
  CHECK(mpkit_matrix_is_monomial(gram.h, &flag) == MPKIT_OK);
  CHECK(flag == 1);
  CHECK(mpkit_matrix_is_monomial(m.h, &flag) == MPKIT_OK);
  CHECK(flag == 0);

  owned_string mono;
  REQUIRE(mpkit_matrix_monomial_report(gram.h, &mono.s) == MPKIT_OK);
  CHECK(has_line(mono.str(), "tau=(1 2)"));
  CHECK(has_line(mono.str(), "mu.1=2"));
  CHECK(has_line(mono.str(), "mu.2=3"));
  CHECK(mpkit_matrix_monomial_report(m.h, &mono.s) == MPKIT_ERR_NOT_MONOMIAL);

  CHECK(mpkit_matrix_is_nsc(m.h, &flag) == MPKIT_OK);
  CHECK(flag == 1);

  // kernel of (1 1) is spanned by (1, 1)
  const uint32_t row[] = {1, 1};
  matrix_handle r, ker;
  REQUIRE(mpkit_matrix_create(f.h, 1, 2, row, &r.h) == MPKIT_OK);
  REQUIRE(mpkit_matrix_kernel(r.h, &ker.h) == MPKIT_OK);
  CHECK(mpkit_matrix_rows(ker.h) == 1);
  CHECK(mpkit_matrix_entry(ker.h, 0, 0, &v) == MPKIT_OK);
  CHECK(v == 1);

  matrix_handle ct;
  REQUIRE(mpkit_matrix_conj_transpose(r.h, &ct.h) == MPKIT_OK);
  CHECK(mpkit_matrix_rows(ct.h) == 2);
  CHECK(mpkit_matrix_cols(ct.h) == 1);

  matrix_handle prod;
  CHECK(mpkit_matrix_multiply(m.h, r.h, &prod.h) == MPKIT_ERR_DIMENSION);
  REQUIRE(mpkit_matrix_multiply(r.h, ct.h, &prod.h) == MPKIT_OK); // 1x2 * 2x1
  CHECK(mpkit_matrix_rows(prod.h) == 1);

  matrix_handle kron;
  REQUIRE(mpkit_matrix_kronecker(m.h, m.h, &kron.h) == MPKIT_OK);
  CHECK(mpkit_matrix_rows(kron.h) == 4);
  CHECK(mpkit_matrix_cols(kron.h) == 4);

  matrix_handle rr;
  REQUIRE(mpkit_matrix_rref(m.h, &rr.h) == MPKIT_OK);
  CHECK(mpkit_matrix_entry(rr.h, 0, 1, &v) == MPKIT_OK);
  CHECK(v == 0); // full rank 2x2 reduces to the identity
}

TEST_CASE("codes through the c surface") {
  field_handle f{gf4()};
  const uint32_t span_rows[] = {1, 1, 2, 2}; // second row dependent
  matrix_handle span;
  REQUIRE(mpkit_matrix_create(f.h, 2, 2, span_rows, &span.h) == MPKIT_OK);
  code_handle c;
  REQUIRE(mpkit_code_create(span.h, &c.h) == MPKIT_OK);
  CHECK(mpkit_code_length(c.h) == 2);
  CHECK(mpkit_code_dim(c.h) == 1);

  matrix_handle gen;
  REQUIRE(mpkit_code_generator(c.h, &gen.h) == MPKIT_OK);
  CHECK(mpkit_matrix_rows(gen.h) == 1);

  owned_string text;
  REQUIRE(mpkit_code_format(c.h, &text.s) == MPKIT_OK);
  code_handle back;
  REQUIRE(mpkit_code_parse(text.s, &back.h) == MPKIT_OK);
  CHECK(mpkit_code_equal(c.h, back.h) == 1);

  // <(1,1)> over GF(4) is Hermitian self-dual
  code_handle dual;
  REQUIRE(mpkit_code_hermitian_dual(c.h, &dual.h) == MPKIT_OK);
  CHECK(mpkit_code_equal(c.h, dual.h) == 1);
  uint32_t hull = 0;
  CHECK(mpkit_code_hull_dim(c.h, &hull) == MPKIT_OK);
  CHECK(hull == 1);

  uint32_t d = 0;
  int zero = 1;
  CHECK(mpkit_code_min_distance(c.h, 0, &d, &zero) == MPKIT_OK);
  CHECK(d == 2);
  CHECK(zero == 0);
  uint32_t bd = 0;
  int bzero = 1;
  CHECK(mpkit_code_brute_min_distance(c.h, 0, &bd, &bzero) == MPKIT_OK);
  CHECK(bd == 2);
  CHECK(bzero == 0);
  CHECK(mpkit_code_min_distance(c.h, 1, &d, &zero) == MPKIT_ERR_CAP_EXCEEDED);

  // the zero code reports the sentinel distance
  matrix_handle empty;
  REQUIRE(mpkit_matrix_create(f.h, 0, 2, nullptr, &empty.h) == MPKIT_OK);
  code_handle z;
  REQUIRE(mpkit_code_create(empty.h, &z.h) == MPKIT_OK);
  CHECK(mpkit_code_dim(z.h) == 0);
  CHECK(mpkit_code_min_distance(z.h, 0, &d, &zero) == MPKIT_OK);
  CHECK(zero == 1);
  CHECK(d == 3);
}

TEST_CASE("matrix-product specs through the c surface") {
  field_handle f{gf4()};
  const uint32_t a1[] = {1, 1, 1, 2};
  matrix_handle defining;
  REQUIRE(mpkit_matrix_create(f.h, 2, 2, a1, &defining.h) == MPKIT_OK);

  const uint32_t row11[] = {1, 1};
  matrix_handle span;
  REQUIRE(mpkit_matrix_create(f.h, 1, 2, row11, &span.h) == MPKIT_OK);
  code_handle c;
  REQUIRE(mpkit_code_create(span.h, &c.h) == MPKIT_OK);

  const mpkit_code* codes[] = {c.h, c.h};
  spec_handle s;
  REQUIRE(mpkit_mpspec_create(defining.h, codes, 2, &s.h) == MPKIT_OK);

  // count disagreement is refused
  mpkit_mpspec* bad = nullptr;
  CHECK(mpkit_mpspec_create(defining.h, codes, 1, &bad) != MPKIT_OK);
  CHECK(bad == nullptr);

  owned_string text;
  REQUIRE(mpkit_mpspec_format(s.h, &text.s) == MPKIT_OK);
  spec_handle back;
  REQUIRE(mpkit_mpspec_parse(text.s, &back.h) == MPKIT_OK);
  owned_string text2;
  REQUIRE(mpkit_mpspec_format(back.h, &text2.s) == MPKIT_OK);
  CHECK(text.str() == text2.str());

  code_handle built;
  REQUIRE(mpkit_mpspec_build(s.h, &built.h) == MPKIT_OK);
  CHECK(mpkit_code_length(built.h) == 4);
  CHECK(mpkit_code_dim(built.h) == 2);

  uint32_t hull = 0, brute = 0;
  CHECK(mpkit_mpspec_hull_dim(s.h, &hull) == MPKIT_OK);
  CHECK(hull == 2);
  CHECK(mpkit_mpspec_brute_hull_dim(s.h, 0, &brute) == MPKIT_OK);
  CHECK(brute == hull);

  owned_string cls;
  REQUIRE(mpkit_mpspec_classify(s.h, 0, &cls.s) == MPKIT_OK);
  CHECK(has_line(cls.str(), "tau=(1 2)"));
  CHECK(has_line(cls.str(), "hull_dim=2"));
  CHECK(has_line(cls.str(), "flag.HDC=true"));
  CHECK(has_line(cls.str(), "flag.HSO=true"));
  owned_string cls2;
  REQUIRE(mpkit_mpspec_classify(s.h, 1, &cls2.s) == MPKIT_OK);
  CHECK(cls.str() == cls2.str());

  owned_string bcls;
  REQUIRE(mpkit_mpspec_brute_classify(s.h, 0, &bcls.s) == MPKIT_OK);
  CHECK(has_line(bcls.str(), "flag.HSO=true"));
  CHECK(has_line(bcls.str(), "hull_dim=2"));

  owned_string screen;
  REQUIRE(mpkit_mpspec_screen(s.h, &screen.s) == MPKIT_OK);
  CHECK(has_line(screen.str(), "obstruction.no_fixed_points=true"));
  CHECK(has_line(screen.str(), "screen.ahdc_ruled_out=true"));

  owned_string bound;
  REQUIRE(mpkit_mpspec_distance_bound(s.h, "prefix", 0, &bound.s) == MPKIT_OK);
  CHECK(has_line(bound.str(), "bound=2"));
  CHECK(has_line(bound.str(), "bound.method=prefix"));
  owned_string nsc;
  REQUIRE(mpkit_mpspec_distance_bound(s.h, "nsc", 0, &nsc.s) == MPKIT_OK);
  CHECK(has_line(nsc.str(), "bound.method=nsc"));
  CHECK(mpkit_mpspec_distance_bound(s.h, "sideways", 0, &nsc.s) == MPKIT_ERR_OUT_OF_RANGE);

  owned_string qp;
  REQUIRE(mpkit_mpspec_quantum(s.h, 0, &qp.s) == MPKIT_OK);
  CHECK(has_line(qp.str(), "quantum.length=4"));
  CHECK(has_line(qp.str(), "quantum.dim=0"));
  CHECK(has_line(qp.str(), "quantum.distance=2"));

  // a spec that is not dual-containing has no stabilizer parameters
  const uint32_t e2[] = {1, 0, 0, 1};
  const uint32_t row10[] = {1, 0};
  matrix_handle id2, span10;
  REQUIRE(mpkit_matrix_create(f.h, 2, 2, e2, &id2.h) == MPKIT_OK);
  REQUIRE(mpkit_matrix_create(f.h, 1, 2, row10, &span10.h) == MPKIT_OK);
  code_handle c10;
  REQUIRE(mpkit_code_create(span10.h, &c10.h) == MPKIT_OK);
  const mpkit_code* mixed[] = {c.h, c10.h};
  spec_handle almost;
  REQUIRE(mpkit_mpspec_create(id2.h, mixed, 2, &almost.h) == MPKIT_OK);
  owned_string no_qp;
  CHECK(mpkit_mpspec_quantum(almost.h, 0, &no_qp.s) == MPKIT_ERR_INAPPLICABLE);
}

TEST_CASE("involutions, tables, search and self-check") {
  uint64_t n = 0;
  CHECK(mpkit_involution_count(4, &n) == MPKIT_OK);
  CHECK(n == 10);
  CHECK(mpkit_involution_count(10, &n) == MPKIT_OK);
  CHECK(n == 9496);

  owned_string inv;
  REQUIRE(mpkit_involutions_report(3, &inv.s) == MPKIT_OK);
  CHECK(has_line(inv.str(), "count=4"));
  CHECK(has_line(inv.str(), "involution.2=(2 3)"));
  CHECK(mpkit_involutions_report(13, &inv.s) == MPKIT_ERR_CAP_EXCEEDED);

  owned_string table;
  REQUIRE(mpkit_table_report(2, &table.s) == MPKIT_OK);
  CHECK(has_line(table.str(), "row.2.tau=(1 2)"));
  CHECK(has_line(table.str(), "row.2.self_orthogonal=C1 <= dualH(C2)"));

  owned_string hits;
  REQUIRE(mpkit_search_run("field p=2 m=2\nk=2\nn=2\ntarget=AHSO\nmax_hits=2\n", &hits.s) ==
          MPKIT_OK);
  CHECK(has_line(hits.str(), "target=AHSO"));
  CHECK(hits.str().find("hit.1.tau=") != std::string::npos);
  CHECK(mpkit_search_run("k=2\nn=2\ntarget=AHSO\n", &hits.s) == MPKIT_ERR_PARSE);

  int all_pass = 0;
  owned_string verdict;
  REQUIRE(mpkit_verify_run(2024, 1, &all_pass, &verdict.s) == MPKIT_OK);
  CHECK(all_pass == 1);
  CHECK(has_line(verdict.str(), "criterion.1=pass"));
  CHECK(mpkit_verify_run(2024, 10, &all_pass, &verdict.s) == MPKIT_ERR_OUT_OF_RANGE);
}
