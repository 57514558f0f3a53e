#include "verify.hpp"

#include "corpus.hpp"
#include "oracle.hpp"
#include "search.hpp"

#include <chrono>
#include <sstream>

namespace mpkit {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Tally {
  uint64_t trials = 0;
  uint64_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++trials;
    if (!ok) {
      if (failures == 0) first_failure = what;
      ++failures;
    }
  }
};

std::string describe(const Tally& t, double secs, const std::string& extra = "") {
  std::ostringstream os;
  os << "checks=" << t.trials << " failures=" << t.failures;
  if (!extra.empty()) os << " " << extra;
  os << " elapsed=" << static_cast<uint64_t>(secs * 1000) << "ms";
  if (t.failures) os << " first: " << t.first_failure;
  return os.str();
}

CriterionResult finish(int id, std::string name, const Tally& t, clock_type::time_point t0,
                       double limit, uint64_t min_trials, const std::string& extra = "") {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.seconds = seconds_since(t0);
  bool in_time = r.seconds < limit;
  r.pass = t.failures == 0 && t.trials >= min_trials && in_time;
  r.detail = describe(t, r.seconds, extra);
  if (!in_time) r.detail += " OVER TIME LIMIT";
  return r;
}

bool is_square(const MPSpec& s) { return s.k() == s.blocks(); }

// Hand-built specs covering the boundary classes: a Hermitian self-dual
// product, both "almost" classes at once, zero constituents, a
// one-constituent almost-dual-containing case and its screened sibling.
std::vector<MPSpec> fixture_specs() {
  FieldPtr f4 = make_field(2, 2);
  FieldPtr f9 = make_field(3, 2);
  uint32_t w = 2; // a generator of GF(4)*

  LinearCode c_a = make_code(Matrix(f4, 1, 2, {1, 1}));
  LinearCode c_b = make_code(Matrix(f4, 1, 2, {1, 0}));
  LinearCode c_full = universe_code(f4, 2);
  LinearCode c_zero = zero_code(f4, 2);
  Matrix a1(f4, 2, 2, {1, 1, 1, w}); // Gram is antidiagonal
  Matrix i2 = identity(f4, 2);

  std::vector<MPSpec> out;
  out.push_back(make_mpspec(a1, {c_a, c_a}));
  out.push_back(make_mpspec(i2, {c_a, c_b}));
  out.push_back(make_mpspec(i2, {c_zero, c_zero}));
  out.push_back(make_mpspec(a1, {c_full, c_b}));
  out.push_back(make_mpspec(i2, {c_full, c_b}));
  out.push_back(make_mpspec(a1, {c_zero, c_a}));

  Matrix a_one(f4, 1, 1, {1});
  out.push_back(make_mpspec(a_one, {make_code(Matrix(f4, 2, 3, {1, 0, 0, 0, 1, 0}))}));
  out.push_back(make_mpspec(a_one, {make_code(Matrix(f4, 1, 3, {1, 0, 0}))}));

  Matrix i2_9 = identity(f9, 2);
  out.push_back(make_mpspec(i2_9, {make_code(Matrix(f9, 1, 2, {1, 3})),
                                   make_code(Matrix(f9, 1, 2, {1, 1}))}));
  return out;
}

CriterionResult criterion1(uint64_t) {
  auto t0 = clock_type::now();
  Tally t;
  t.check(involution_count(2) == 2, "count(2) != 2");
  t.check(involution_count(3) == 4, "count(3) != 4");
  t.check(involution_count(4) == 10, "count(4) != 10");
  for (uint32_t k = 0; k <= 10; ++k) {
    auto invs = enumerate_involutions(k);
    t.check(invs.size() == involution_count(k), "enumeration size mismatch at k=" + std::to_string(k));
    for (size_t i = 0; i < invs.size(); ++i) {
      if (!is_involution(invs[i])) {
        t.check(false, "non-involution enumerated at k=" + std::to_string(k));
        break;
      }
      if (i > 0 && !(invs[i - 1].img < invs[i].img)) {
        t.check(false, "enumeration not strictly lexicographic at k=" + std::to_string(k));
        break;
      }
    }
  }
  for (uint32_t k = 1; k <= 7; ++k)
    t.check(brute_involution_count(k) == involution_count(k),
            "full permutation scan disagrees at k=" + std::to_string(k));
  return finish(1, "involution census", t, t0, 60.0, 20);
}

CriterionResult criterion2(uint64_t seed) {
  auto t0 = clock_type::now();
  Tally t;
  auto specs = sample_corpus(seed, 300);
  for (size_t i = 0; i < specs.size(); ++i) {
    const MPSpec& s = specs[i];
    std::string at = " at spec " + std::to_string(i);
    uint32_t via_formula = hull_dim_formula(s);
    uint32_t via_scan = brute_mp_hull_dim(s);
    LinearCode built = build(s);
    uint32_t via_meet = intersect(built, hermitian_dual(built)).dim();
    t.check(via_formula == via_scan, "formula vs word scan" + at);
    t.check(via_formula == via_meet, "formula vs built meet" + at);
    t.check(built.dim() == s.dim_sum(), "built dimension" + at);
  }
  return finish(2, "hull dimension formula vs word scan", t, t0, 300.0, 300,
                "specs=" + std::to_string(specs.size()));
}

CriterionResult criterion3(uint64_t seed) {
  auto t0 = clock_type::now();
  Tally t;
  Rng rng(seed ^ 0xa5a5a5a5ull);
  FieldPtr f4 = make_field(2, 2);
  FieldPtr f9 = make_field(3, 2);
  uint32_t pairs = 0;
  for (uint32_t i = 0; i < 500; ++i, ++pairs) {
    const FieldPtr& f = (i % 2 == 0) ? f4 : f9;
    uint32_t n = 1 + rng.uniform(6);
    LinearCode c1 = random_code(rng, f, n, rng.uniform(n + 1));
    LinearCode c2 = random_code(rng, f, n, rng.uniform(n + 1));
    std::string at = " at pair " + std::to_string(i);
    t.check(intersect(c1, hermitian_dual(c2)).dim() == meet_hermitian_dual_dim(c1, c2),
            "meet-dual dimension" + at);
    t.check(hermitian_hull(c1).dim() == hermitian_hull_dim(c1), "hull dimension" + at);
  }
  return finish(3, "meet and hull rank identities", t, t0, 60.0, 1000,
                "pairs=" + std::to_string(pairs));
}

CriterionResult criterion4(uint64_t seed) {
  auto t0 = clock_type::now();
  Tally t;
  FieldPtr f4 = make_field(2, 2);
  FieldPtr f9 = make_field(3, 2);

  uint64_t herm_pos = 0, eucl_pos = 0;
  auto probe = [&](const FieldPtr& f, const Matrix& a, const std::string& at) {
    Matrix gh = gram_hermitian(a);
    if (is_monomial(gh)) {
      ++herm_pos;
      t.check(check_involution_structure(f, monomial_decompose(gh), pairing_mode::conjugate),
              "hermitian gram structure" + at);
    }
    Matrix ge = gram_euclidean(a);
    if (is_monomial(ge)) {
      ++eucl_pos;
      t.check(check_involution_structure(f, monomial_decompose(ge), pairing_mode::transpose),
              "euclidean gram structure" + at);
    }
  };

  // Every 2x2 matrix over GF(4).
  for (uint32_t counter = 0; counter < 256; ++counter) {
    uint32_t v = counter;
    std::vector<uint32_t> data(4);
    for (auto& d : data) {
      d = v % 4;
      v /= 4;
    }
    probe(f4, Matrix(f4, 2, 2, std::move(data)), " at 2x2 #" + std::to_string(counter));
  }
  uint64_t exhaustive_herm = herm_pos;

  // 100000 sampled 3x3 matrices: half built to have a monomial Hermitian
  // Gram, a tenth monomial themselves (hitting the Euclidean mode too), the
  // rest uniform.
  Rng rng(seed ^ 0x5bd1e995ull);
  for (uint32_t i = 0; i < 100000; ++i) {
    const FieldPtr& f = (i % 4 < 2) ? f4 : f9;
    Matrix a = (i % 10 == 9)  ? random_monomial_matrix(rng, f, 3)
               : (i % 2 == 0) ? random_gram_monomial_defining(rng, f, 3, 3)
                              : random_matrix(rng, f, 3, 3);
    probe(f, a, " at 3x3 #" + std::to_string(i));
  }
  t.check(exhaustive_herm > 0, "no monomial Hermitian grams among 2x2");
  t.check(herm_pos >= 50000, "too few Hermitian-monomial samples");
  t.check(eucl_pos >= 10000, "too few Euclidean-monomial samples");
  return finish(4, "monomial gram pairing structure", t, t0, 60.0, 50000,
                "hermitian_cases=" + std::to_string(herm_pos) +
                    " euclidean_cases=" + std::to_string(eucl_pos));
}

CriterionResult criterion5(uint64_t seed) {
  auto t0 = clock_type::now();
  Tally t;
  auto specs = sample_corpus(seed + 1, 300);
  auto fixtures = fixture_specs();
  specs.insert(specs.end(), fixtures.begin(), fixtures.end());

  uint64_t word_set_cases = 0;
  for (size_t i = 0; i < specs.size(); ++i) {
    const MPSpec& s = specs[i];
    std::string at = " at spec " + std::to_string(i);
    Classification c = classify(s);
    BruteFlags bf = brute_mp_classify(s);
    if (bf.by_word_sets) ++word_set_cases;
    t.check(c.hull_dim == bf.hull_dim && c.dim == bf.dim && c.dual_dim == bf.dual_dim,
            "dimension triple vs word sets" + at);
    t.check(c.hdc == bf.hdc && c.ahdc == bf.ahdc && c.hso == bf.hso && c.ahso == bf.ahso &&
                c.hlcd == bf.hlcd,
            "flags vs word sets" + at);
    if (is_square(s)) {
      Classification ce = classify_explicit(s);
      t.check(same_flags(c, ce) && ce.hull_dim == c.hull_dim, "transposition-tally route" + at);
      t.check(ahdc_alt_check(s) == c.ahdc, "dual-side tally" + at);
      t.check(ahso_alt_check(s) == c.ahso, "primal-side tally" + at);
    }
  }
  t.check(word_set_cases >= 30, "too few literal word-set classifications");
  return finish(5, "classifier route equivalence", t, t0, 300.0, 300,
                "specs=" + std::to_string(specs.size()) +
                    " word_set_cases=" + std::to_string(word_set_cases));
}

CriterionResult criterion6(uint64_t seed) {
  auto t0 = clock_type::now();
  Tally t;
  FieldPtr f4 = make_field(2, 2);
  auto defs = all_gram_monomial_matrices(f4, 2);
  auto pool = enumerate_all_codes(f4, 2);
  uint64_t fired = 0;

  auto inspect = [&](const MPSpec& s, const std::string& at) {
    ScreenResult sr = nonexistence_screen(s);
    Classification c = classify(s);
    if (sr.ahdc_ruled_out()) {
      ++fired;
      t.check(!c.ahdc, "screen contradicted on the dual-containing side" + at);
    }
    if (sr.ahso_ruled_out()) {
      ++fired;
      t.check(!c.ahso, "screen contradicted on the self-orthogonal side" + at);
    }
  };

  for (size_t di = 0; di < defs.size(); ++di)
    for (size_t i = 0; i < pool.size(); ++i)
      for (size_t j = 0; j < pool.size(); ++j)
        inspect(make_mpspec(defs[di], {pool[i], pool[j]}),
                " at def " + std::to_string(di) + " codes " + std::to_string(i) + "," +
                    std::to_string(j));

  auto specs = sample_corpus(seed + 2, 300);
  auto fixtures = fixture_specs();
  specs.insert(specs.end(), fixtures.begin(), fixtures.end());
  for (size_t i = 0; i < specs.size(); ++i)
    if (is_square(specs[i])) inspect(specs[i], " at corpus spec " + std::to_string(i));

  t.check(fired > 0, "screen never fired");
  return finish(6, "parity screen soundness", t, t0, 300.0, 100,
                "defining=" + std::to_string(defs.size()) + " fired=" + std::to_string(fired));
}

CriterionResult criterion7(uint64_t seed) {
  auto t0 = clock_type::now();
  Tally t;
  auto specs = sample_corpus(seed + 3, 150);

  // Add specs with plain (non-monomial-Gram) full-rank defining matrices,
  // including ones that are non-singular by columns.
  Rng rng(seed ^ 0xdeadbeefull);
  FieldPtr f4 = make_field(2, 2);
  FieldPtr f9 = make_field(3, 2);
  uint32_t w = 2;
  for (uint32_t i = 0; i < 60; ++i) {
    const FieldPtr& f = (i % 2 == 0) ? f4 : f9;
    uint32_t dim_cap = (i % 2 == 0) ? 8 : 5;
    uint32_t k = 2 + rng.uniform(2);
    uint32_t n = 1 + rng.uniform(4);
    Matrix a(f, 0, 0);
    do {
      a = random_matrix(rng, f, k, k);
    } while (rank(a) != k);
    std::vector<LinearCode> codes;
    uint32_t remaining = dim_cap;
    for (uint32_t ci = 0; ci < k; ++ci) {
      uint32_t hi = std::min(n, remaining);
      uint32_t td = rng.uniform(hi + 1);
      remaining -= td;
      codes.push_back(random_code(rng, f, n, td));
    }
    specs.push_back(make_mpspec(std::move(a), std::move(codes)));
  }
  specs.push_back(make_mpspec(Matrix(f4, 2, 2, {1, 1, 1, w}),
                              {make_code(Matrix(f4, 1, 2, {1, 1})), universe_code(f4, 2)}));

  uint64_t bounded = 0, nsc_cases = 0;
  for (size_t i = 0; i < specs.size(); ++i) {
    const MPSpec& s = specs[i];
    if (s.dim_sum() == 0 || rank(s.a) != s.k()) continue;
    std::string at = " at spec " + std::to_string(i);
    uint32_t d = min_distance(build(s)).value;
    uint32_t b = distance_bound(s, bound_method::prefix).value;
    t.check(b <= d, "prefix bound exceeds the true distance" + at);
    ++bounded;
    bool nsc = false;
    try {
      nsc = is_nsc(s.a);
    } catch (const error&) {
      nsc = false; // rectangular beyond the scan cap: skip the variant
    }
    if (nsc) {
      uint32_t bn = distance_bound(s, bound_method::nsc).value;
      t.check(bn <= b, "column-rank bound exceeds the prefix bound" + at);
      t.check(bn <= d, "column-rank bound exceeds the true distance" + at);
      ++nsc_cases;
    }
  }
  t.check(nsc_cases >= 1, "no spec exercised the column-rank bound");
  return finish(7, "distance bound soundness", t, t0, 300.0, 100,
                "bounded=" + std::to_string(bounded) + " nsc_cases=" + std::to_string(nsc_cases));
}

CriterionResult criterion8(uint64_t) {
  auto t0 = clock_type::now();
  Tally t;
  auto t2 = classification_table(2);
  auto t3 = classification_table(3);
  auto t4 = classification_table(4);
  t.check(t2.size() == 2, "k=2 row count");
  t.check(t3.size() == 4, "k=3 row count");
  t.check(t4.size() == 10, "k=4 row count");

  t.check(format_perm(t2[0].tau) == "id", "k=2 first row tau");
  t.check(t2[0].dual_containing ==
              std::vector<std::string>{"dualH(C1) <= C1", "dualH(C2) <= C2"},
          "k=2 identity conditions");
  t.check(t2[0].self_orthogonal ==
              std::vector<std::string>{"C1 <= dualH(C1)", "C2 <= dualH(C2)"},
          "k=2 identity mirror conditions");
  t.check(format_perm(t2[1].tau) == "(1 2)", "k=2 second row tau");
  t.check(t2[1].dual_containing == std::vector<std::string>{"dualH(C1) <= C2"},
          "k=2 swap conditions");
  t.check(t2[1].self_orthogonal == std::vector<std::string>{"C1 <= dualH(C2)"},
          "k=2 swap mirror conditions");

  std::vector<std::string> taus3;
  for (const auto& row : t3) taus3.push_back(format_perm(row.tau));
  t.check(taus3 == std::vector<std::string>{"id", "(1 2)", "(1 3)", "(2 3)"}, "k=3 row order");
  t.check(t3[1].dual_containing ==
              std::vector<std::string>{"dualH(C1) <= C2", "dualH(C3) <= C3"},
          "k=3 swap conditions");

  std::vector<std::string> taus4;
  for (const auto& row : t4) taus4.push_back(format_perm(row.tau));
  t.check(taus4 == std::vector<std::string>{"id", "(1 2)", "(1 3)", "(1 4)", "(2 3)", "(2 4)",
                                            "(3 4)", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"},
          "k=4 row order");
  for (uint32_t k = 2; k <= 4; ++k)
    t.check(classification_table(k).size() == involution_count(k),
            "table size vs involution count at k=" + std::to_string(k));
  return finish(8, "classification table layout", t, t0, 60.0, 10);
}

CriterionResult criterion9(uint64_t seed) {
  auto t0 = clock_type::now();
  Tally t;
  auto run_once = [&]() {
    std::ostringstream os;
    auto specs = sample_corpus(seed, 40);
    for (const MPSpec& s : specs) {
      os << format_mpspec(s);
      os << render_report(classification_report(s, classify(s)));
      if (is_square(s)) os << render_report(screen_report(nonexistence_screen(s)));
      if (s.dim_sum() > 0)
        os << render_report(bound_report(distance_bound(s, bound_method::prefix)));
    }
    SearchConfig cfg = parse_search_config(
        "field p=2 m=2\nk=2\nn=2\ntarget=AHSO\nmax_hits=3\nseed=7\n");
    os << render_report(search_report(run_search(cfg)));
    os << render_report(involutions_report(4));
    os << render_report(table_report(3));
    return os.str();
  };
  std::string first = run_once();
  std::string second = run_once();
  t.check(!first.empty(), "empty pipeline output");
  t.check(first == second, "pipeline output differs between identically seeded runs");
  return finish(9, "deterministic machine output", t, t0, 60.0, 2,
                "bytes=" + std::to_string(first.size()));
}

} // namespace

std::vector<CriterionResult> run_acceptance(uint64_t seed, int only) {
  using Fn = CriterionResult (*)(uint64_t);
  static const Fn fns[9] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                            criterion6, criterion7, criterion8, criterion9};
  std::vector<CriterionResult> out;
  for (int i = 1; i <= 9; ++i) {
    if (only != 0 && only != i) continue;
    out.push_back(fns[i - 1](seed));
  }
  if (out.empty()) fail(errc::out_of_range, "criterion id must be 1..9");
  return out;
}

Report acceptance_report(const std::vector<CriterionResult>& results) {
  Report r;
  bool all = true;
  for (const auto& cr : results) {
    std::string p = "criterion." + std::to_string(cr.id);
    r.emplace_back(p, cr.pass ? "pass" : "fail");
    r.emplace_back(p + ".name", cr.name);
    r.emplace_back(p + ".detail", cr.detail);
    all = all && cr.pass;
  }
  r.emplace_back("overall", all ? "pass" : "fail");
  return r;
}

} // namespace mpkit
