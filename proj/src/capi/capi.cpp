#include "mpkit.h"

#include "core/io.hpp"
#include "core/oracle.hpp"
#include "core/search.hpp"
#include "core/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct mpkit_field {
  mpkit::FieldPtr f;
};
struct mpkit_matrix {
  mpkit::Matrix m;
};
struct mpkit_code {
  mpkit::LinearCode c;
};
struct mpkit_mpspec {
  mpkit::MPSpec s;
};

namespace {

thread_local std::string g_last_error;

mpkit_status map_errc(mpkit::errc k) {
  using mpkit::errc;
  switch (k) {
  case errc::parse_error: return MPKIT_ERR_PARSE;
  case errc::mismatch: return MPKIT_ERR_MISMATCH;
  case errc::dimension_mismatch: return MPKIT_ERR_DIMENSION;
  case errc::division_by_zero: return MPKIT_ERR_DIVISION_BY_ZERO;
  case errc::not_hermitian: return MPKIT_ERR_NOT_HERMITIAN;
  case errc::not_monomial: return MPKIT_ERR_NOT_MONOMIAL;
  case errc::not_involution: return MPKIT_ERR_NOT_INVOLUTION;
  case errc::cap_exceeded: return MPKIT_ERR_CAP_EXCEEDED;
  case errc::out_of_range: return MPKIT_ERR_OUT_OF_RANGE;
  case errc::inapplicable: return MPKIT_ERR_INAPPLICABLE;
  case errc::internal: return MPKIT_ERR_INTERNAL;
  }
  return MPKIT_ERR_INTERNAL;
}

template <class Fn> mpkit_status guarded(Fn&& fn) {
  try {
    fn();
    return MPKIT_OK;
  } catch (const mpkit::error& e) {
    g_last_error = e.what();
    return map_errc(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return MPKIT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MPKIT_ERR_INTERNAL;
  }
}

mpkit_status null_argument() {
  g_last_error = "null argument";
  return MPKIT_ERR_OUT_OF_RANGE;
}

#define MPKIT_REQUIRE(x)                                                                           \
  do {                                                                                             \
    if (!(x)) return null_argument();                                                              \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

uint64_t effective_cap(uint64_t cap) { return cap == 0 ? (1ull << 20) : cap; }

mpkit::Report brute_flags_report(const mpkit::BruteFlags& bf) {
  using mpkit::bool_token;
  mpkit::Report r;
  r.emplace_back("hull_dim", std::to_string(bf.hull_dim));
  r.emplace_back("dim", std::to_string(bf.dim));
  r.emplace_back("dual_dim", std::to_string(bf.dual_dim));
  r.emplace_back("flag.HDC", bool_token(bf.hdc));
  r.emplace_back("flag.AHDC", bool_token(bf.ahdc));
  r.emplace_back("flag.HSO", bool_token(bf.hso));
  r.emplace_back("flag.AHSO", bool_token(bf.ahso));
  r.emplace_back("flag.HLCD", bool_token(bf.hlcd));
  r.emplace_back("by_word_sets", bool_token(bf.by_word_sets));
  return r;
}

} // namespace

extern "C" {

const char* mpkit_version(void) { return "0.1.0"; }

const char* mpkit_last_error(void) { return g_last_error.c_str(); }

void mpkit_string_free(char* s) { std::free(s); }

/* ---- fields ---------------------------------------------------------- */

mpkit_status mpkit_field_create(uint32_t p, uint32_t m, const uint32_t* modulus,
                                mpkit_field** out) {
  MPKIT_REQUIRE(out);
  return guarded([&] {
    mpkit::FieldPtr f = modulus
        ? mpkit::make_field(p, m, std::vector<uint32_t>(modulus, modulus + m + 1))
        : mpkit::make_field(p, m);
    *out = new mpkit_field{std::move(f)};
  });
}

void mpkit_field_free(mpkit_field* f) { delete f; }

uint32_t mpkit_field_order(const mpkit_field* f) { return f ? f->f->order() : 0; }
uint32_t mpkit_field_characteristic(const mpkit_field* f) { return f ? f->f->p() : 0; }
uint32_t mpkit_field_degree(const mpkit_field* f) { return f ? f->f->m() : 0; }

mpkit_status mpkit_field_add(const mpkit_field* f, uint32_t a, uint32_t b, uint32_t* out) {
  MPKIT_REQUIRE(f && out);
  return guarded([&] {
    f->f->check_element(a);
    f->f->check_element(b);
    *out = f->f->add(a, b);
  });
}

mpkit_status mpkit_field_mul(const mpkit_field* f, uint32_t a, uint32_t b, uint32_t* out) {
  MPKIT_REQUIRE(f && out);
  return guarded([&] {
    f->f->check_element(a);
    f->f->check_element(b);
    *out = f->f->mul(a, b);
  });
}

mpkit_status mpkit_field_neg(const mpkit_field* f, uint32_t a, uint32_t* out) {
  MPKIT_REQUIRE(f && out);
  return guarded([&] {
    f->f->check_element(a);
    *out = f->f->neg(a);
  });
}

mpkit_status mpkit_field_inv(const mpkit_field* f, uint32_t a, uint32_t* out) {
  MPKIT_REQUIRE(f && out);
  return guarded([&] {
    f->f->check_element(a);
    *out = f->f->inv(a);
  });
}

mpkit_status mpkit_field_pow(const mpkit_field* f, uint32_t a, uint64_t e, uint32_t* out) {
  MPKIT_REQUIRE(f && out);
  return guarded([&] {
    f->f->check_element(a);
    *out = f->f->pow(a, e);
  });
}

mpkit_status mpkit_field_conj(const mpkit_field* f, uint32_t a, uint32_t* out) {
  MPKIT_REQUIRE(f && out);
  return guarded([&] {
    f->f->check_element(a);
    if (!f->f->has_conjugation())
      mpkit::fail(mpkit::errc::not_hermitian, "conjugation needs even extension degree");
    *out = f->f->conj(a);
  });
}

mpkit_status mpkit_field_format(const mpkit_field* f, char** out) {
  MPKIT_REQUIRE(f && out);
  return guarded([&] { *out = dup_string(mpkit::format_field_line(f->f)); });
}

/* ---- matrices -------------------------------------------------------- */

mpkit_status mpkit_matrix_create(const mpkit_field* f, uint32_t rows, uint32_t cols,
                                 const uint32_t* data, mpkit_matrix** out) {
  MPKIT_REQUIRE(f && out);
  uint64_t total = static_cast<uint64_t>(rows) * cols;
  MPKIT_REQUIRE(data || total == 0);
  return guarded([&] {
    std::vector<uint32_t> values(data, data + total);
    *out = new mpkit_matrix{mpkit::Matrix(f->f, rows, cols, std::move(values))};
  });
}

mpkit_status mpkit_matrix_parse(const char* text, mpkit_matrix** out) {
  MPKIT_REQUIRE(text && out);
  return guarded([&] { *out = new mpkit_matrix{mpkit::parse_matrix(text)}; });
}

void mpkit_matrix_free(mpkit_matrix* m) { delete m; }

uint32_t mpkit_matrix_rows(const mpkit_matrix* m) { return m ? m->m.rows() : 0; }
uint32_t mpkit_matrix_cols(const mpkit_matrix* m) { return m ? m->m.cols() : 0; }

mpkit_status mpkit_matrix_entry(const mpkit_matrix* m, uint32_t i, uint32_t j, uint32_t* out) {
  MPKIT_REQUIRE(m && out);
  return guarded([&] { *out = m->m.at(i, j); });
}

mpkit_status mpkit_matrix_format(const mpkit_matrix* m, char** out) {
  MPKIT_REQUIRE(m && out);
  return guarded([&] { *out = dup_string(mpkit::format_matrix(m->m)); });
}

mpkit_status mpkit_matrix_rank(const mpkit_matrix* m, uint32_t* out) {
  MPKIT_REQUIRE(m && out);
  return guarded([&] { *out = mpkit::rank(m->m); });
}

mpkit_status mpkit_matrix_rref(const mpkit_matrix* m, mpkit_matrix** out) {
  MPKIT_REQUIRE(m && out);
  return guarded([&] { *out = new mpkit_matrix{mpkit::rref(m->m)}; });
}

mpkit_status mpkit_matrix_kernel(const mpkit_matrix* m, mpkit_matrix** out) {
  MPKIT_REQUIRE(m && out);
  return guarded([&] { *out = new mpkit_matrix{mpkit::kernel(m->m)}; });
}

mpkit_status mpkit_matrix_multiply(const mpkit_matrix* a, const mpkit_matrix* b,
                                   mpkit_matrix** out) {
  MPKIT_REQUIRE(a && b && out);
  return guarded([&] { *out = new mpkit_matrix{mpkit::multiply(a->m, b->m)}; });
}

mpkit_status mpkit_matrix_kronecker(const mpkit_matrix* a, const mpkit_matrix* b,
                                    mpkit_matrix** out) {
  MPKIT_REQUIRE(a && b && out);
  return guarded([&] { *out = new mpkit_matrix{mpkit::kronecker(a->m, b->m)}; });
}

mpkit_status mpkit_matrix_conj_transpose(const mpkit_matrix* m, mpkit_matrix** out) {
  MPKIT_REQUIRE(m && out);
  return guarded([&] { *out = new mpkit_matrix{mpkit::conj_transpose(m->m)}; });
}

mpkit_status mpkit_matrix_determinant(const mpkit_matrix* m, uint32_t* out) {
  MPKIT_REQUIRE(m && out);
  return guarded([&] { *out = mpkit::determinant(m->m); });
}

mpkit_status mpkit_matrix_gram_hermitian(const mpkit_matrix* m, mpkit_matrix** out) {
  MPKIT_REQUIRE(m && out);
  return guarded([&] { *out = new mpkit_matrix{mpkit::gram_hermitian(m->m)}; });
}

mpkit_status mpkit_matrix_is_monomial(const mpkit_matrix* m, int* out) {
  MPKIT_REQUIRE(m && out);
  return guarded([&] { *out = mpkit::is_monomial(m->m) ? 1 : 0; });
}

mpkit_status mpkit_matrix_monomial_report(const mpkit_matrix* m, char** out) {
  MPKIT_REQUIRE(m && out);
  return guarded([&] {
    mpkit::MonomialDecomposition d = mpkit::monomial_decompose(m->m);
    mpkit::Report r;
    r.emplace_back("tau", mpkit::format_perm(d.tau));
    for (size_t i = 0; i < d.mu.size(); ++i)
      r.emplace_back("mu." + std::to_string(i + 1), std::to_string(d.mu[i]));
    *out = dup_string(mpkit::render_report(r));
  });
}

mpkit_status mpkit_matrix_is_nsc(const mpkit_matrix* m, int* out) {
  MPKIT_REQUIRE(m && out);
  return guarded([&] { *out = mpkit::is_nsc(m->m) ? 1 : 0; });
}

/* ---- linear codes ----------------------------------------------------- */

mpkit_status mpkit_code_create(const mpkit_matrix* span, mpkit_code** out) {
  MPKIT_REQUIRE(span && out);
  return guarded([&] { *out = new mpkit_code{mpkit::make_code(span->m)}; });
}

mpkit_status mpkit_code_parse(const char* text, mpkit_code** out) {
  MPKIT_REQUIRE(text && out);
  return guarded([&] { *out = new mpkit_code{mpkit::parse_code(text)}; });
}

void mpkit_code_free(mpkit_code* c) { delete c; }

uint32_t mpkit_code_length(const mpkit_code* c) { return c ? c->c.length() : 0; }
uint32_t mpkit_code_dim(const mpkit_code* c) { return c ? c->c.dim() : 0; }

mpkit_status mpkit_code_generator(const mpkit_code* c, mpkit_matrix** out) {
  MPKIT_REQUIRE(c && out);
  return guarded([&] { *out = new mpkit_matrix{c->c.generator()}; });
}

mpkit_status mpkit_code_format(const mpkit_code* c, char** out) {
  MPKIT_REQUIRE(c && out);
  return guarded([&] { *out = dup_string(mpkit::format_code(c->c)); });
}

int mpkit_code_equal(const mpkit_code* a, const mpkit_code* b) {
  if (!a || !b) return 0;
  return a->c == b->c ? 1 : 0;
}

mpkit_status mpkit_code_hermitian_dual(const mpkit_code* c, mpkit_code** out) {
  MPKIT_REQUIRE(c && out);
  return guarded([&] { *out = new mpkit_code{mpkit::hermitian_dual(c->c)}; });
}

mpkit_status mpkit_code_hull_dim(const mpkit_code* c, uint32_t* out) {
  MPKIT_REQUIRE(c && out);
  return guarded([&] { *out = mpkit::hermitian_hull_dim(c->c); });
}

mpkit_status mpkit_code_min_distance(const mpkit_code* c, uint64_t cap, uint32_t* value,
                                     int* zero_code) {
  MPKIT_REQUIRE(c && value && zero_code);
  return guarded([&] {
    mpkit::DistanceResult d = mpkit::min_distance(c->c, effective_cap(cap));
    *value = d.value;
    *zero_code = d.zero_code ? 1 : 0;
  });
}

/* ---- matrix-product specs --------------------------------------------- */

mpkit_status mpkit_mpspec_create(const mpkit_matrix* defining, const mpkit_code* const* codes,
                                 uint32_t count, mpkit_mpspec** out) {
  MPKIT_REQUIRE(defining && out);
  MPKIT_REQUIRE(codes || count == 0);
  for (uint32_t i = 0; i < count; ++i) MPKIT_REQUIRE(codes[i]);
  return guarded([&] {
    std::vector<mpkit::LinearCode> cs;
    cs.reserve(count);
    for (uint32_t i = 0; i < count; ++i) cs.push_back(codes[i]->c);
    *out = new mpkit_mpspec{mpkit::make_mpspec(defining->m, std::move(cs))};
  });
}

mpkit_status mpkit_mpspec_parse(const char* text, mpkit_mpspec** out) {
  MPKIT_REQUIRE(text && out);
  return guarded([&] { *out = new mpkit_mpspec{mpkit::parse_mpspec(text)}; });
}

void mpkit_mpspec_free(mpkit_mpspec* s) { delete s; }

mpkit_status mpkit_mpspec_format(const mpkit_mpspec* s, char** out) {
  MPKIT_REQUIRE(s && out);
  return guarded([&] { *out = dup_string(mpkit::format_mpspec(s->s)); });
}

mpkit_status mpkit_mpspec_build(const mpkit_mpspec* s, mpkit_code** out) {
  MPKIT_REQUIRE(s && out);
  return guarded([&] { *out = new mpkit_code{mpkit::build(s->s)}; });
}

mpkit_status mpkit_mpspec_hull_dim(const mpkit_mpspec* s, uint32_t* out) {
  MPKIT_REQUIRE(s && out);
  return guarded([&] { *out = mpkit::hull_dim_formula(s->s); });
}

mpkit_status mpkit_mpspec_classify(const mpkit_mpspec* s, int explicit_route, char** report) {
  MPKIT_REQUIRE(s && report);
  return guarded([&] {
    mpkit::Classification c =
        explicit_route ? mpkit::classify_explicit(s->s) : mpkit::classify(s->s);
    *report = dup_string(mpkit::render_report(mpkit::classification_report(s->s, c)));
  });
}

mpkit_status mpkit_mpspec_screen(const mpkit_mpspec* s, char** report) {
  MPKIT_REQUIRE(s && report);
  return guarded([&] {
    *report = dup_string(mpkit::render_report(mpkit::screen_report(
        mpkit::nonexistence_screen(s->s))));
  });
}

mpkit_status mpkit_mpspec_distance_bound(const mpkit_mpspec* s, const char* method,
                                         uint64_t cap, char** report) {
  MPKIT_REQUIRE(s && method && report);
  std::string name(method);
  mpkit::bound_method bm;
  if (name == "prefix") {
    bm = mpkit::bound_method::prefix;
  } else if (name == "nsc") {
    bm = mpkit::bound_method::nsc;
  } else {
    g_last_error = "unknown bound method: " + name;
    return MPKIT_ERR_OUT_OF_RANGE;
  }
  return guarded([&] {
    *report = dup_string(mpkit::render_report(
        mpkit::bound_report(mpkit::distance_bound(s->s, bm, effective_cap(cap)))));
  });
}

mpkit_status mpkit_mpspec_quantum(const mpkit_mpspec* s, uint64_t cap, char** report) {
  MPKIT_REQUIRE(s && report);
  return guarded([&] {
    *report = dup_string(mpkit::render_report(
        mpkit::quantum_report(mpkit::quantum_params(s->s, effective_cap(cap)))));
  });
}

/* ---- brute-force reference paths -------------------------------------- */

mpkit_status mpkit_mpspec_brute_hull_dim(const mpkit_mpspec* s, uint64_t cap, uint32_t* out) {
  MPKIT_REQUIRE(s && out);
  return guarded([&] { *out = mpkit::brute_mp_hull_dim(s->s, effective_cap(cap)); });
}

mpkit_status mpkit_mpspec_brute_classify(const mpkit_mpspec* s, uint64_t cap, char** report) {
  MPKIT_REQUIRE(s && report);
  return guarded([&] {
    *report = dup_string(mpkit::render_report(
        brute_flags_report(mpkit::brute_mp_classify(s->s, effective_cap(cap)))));
  });
}

mpkit_status mpkit_code_brute_min_distance(const mpkit_code* c, uint64_t cap, uint32_t* value,
                                           int* zero_code) {
  MPKIT_REQUIRE(c && value && zero_code);
  return guarded([&] {
    mpkit::DistanceResult d = mpkit::brute_min_distance(c->c.generator(), effective_cap(cap));
    *value = d.value;
    *zero_code = d.zero_code ? 1 : 0;
  });
}

/* ---- involutions and the classification table ------------------------- */

mpkit_status mpkit_involution_count(uint32_t k, uint64_t* out) {
  MPKIT_REQUIRE(out);
  return guarded([&] { *out = mpkit::involution_count(k); });
}

mpkit_status mpkit_involutions_report(uint32_t k, char** out) {
  MPKIT_REQUIRE(out);
  return guarded([&] { *out = dup_string(mpkit::render_report(mpkit::involutions_report(k))); });
}

mpkit_status mpkit_table_report(uint32_t k, char** out) {
  MPKIT_REQUIRE(out);
  return guarded([&] { *out = dup_string(mpkit::render_report(mpkit::table_report(k))); });
}

/* ---- search and self-check -------------------------------------------- */

mpkit_status mpkit_search_run(const char* config_text, char** report) {
  MPKIT_REQUIRE(config_text && report);
  return guarded([&] {
    mpkit::SearchConfig cfg = mpkit::parse_search_config(config_text);
    *report = dup_string(mpkit::render_report(mpkit::search_report(mpkit::run_search(cfg))));
  });
}

mpkit_status mpkit_verify_run(uint64_t seed, int criterion, int* all_pass, char** report) {
  MPKIT_REQUIRE(all_pass && report);
  return guarded([&] {
    std::vector<mpkit::CriterionResult> results = mpkit::run_acceptance(seed, criterion);
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    *all_pass = all ? 1 : 0;
    *report = dup_string(mpkit::render_report(mpkit::acceptance_report(results)));
  });
}

} // extern "C"
