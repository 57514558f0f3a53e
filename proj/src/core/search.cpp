#include "search.hpp"

#include <algorithm>
#include <sstream>

namespace mpkit {

std::vector<Matrix> all_gram_monomial_matrices(const FieldPtr& f, uint32_t k) {
  const FieldSpec& F = *f;
  uint64_t total = 1;
  for (uint32_t i = 0; i < k * k; ++i) {
    total *= F.order();
    if (total > (1ull << 26)) fail(errc::cap_exceeded, "matrix space exceeds 2^26; sample instead");
  }
  std::vector<Matrix> out;
  std::vector<uint32_t> data(static_cast<size_t>(k) * k);
  for (uint64_t counter = 0; counter < total; ++counter) {
    uint64_t v = counter;
    for (auto& d : data) {
      d = static_cast<uint32_t>(v % F.order());
      v /= F.order();
    }
    Matrix m(f, k, k, data);
    if (is_monomial(gram_hermitian(m))) out.push_back(std::move(m));
  }
  return out;
}

std::vector<Matrix> sample_gram_monomial_matrices(const FieldPtr& f, uint32_t k, uint32_t count,
                                                  uint64_t seed) {
  Rng rng(seed);
  std::vector<Matrix> out;
  out.reserve(count);
  while (out.size() < count) {
    Matrix m = (out.size() % 2 == 0) ? random_gram_monomial_defining(rng, f, k, k)
                                     : random_matrix(rng, f, k, k);
    if (is_monomial(gram_hermitian(m))) out.push_back(std::move(m));
  }
  return out;
}

namespace {

uint64_t cfg_uint(const std::string& v, const char* what) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
    fail(errc::parse_error, std::string("expected a number for ") + what);
  return std::stoull(v);
}

bool known_target(const std::string& t) {
  return t == "HDC" || t == "AHDC" || t == "HSO" || t == "AHSO" || t == "HLCD";
}

bool flag_of(const Classification& c, const std::string& target) {
  if (target == "HDC") return c.hdc;
  if (target == "AHDC") return c.ahdc;
  if (target == "HSO") return c.hso;
  if (target == "AHSO") return c.ahso;
  if (target == "HLCD") return c.hlcd;
  fail(errc::parse_error, "unknown target flag: " + target);
}

std::string oneline(const std::string& text) {
  std::string out;
  for (char ch : text) {
    if (ch == '\n') {
      if (!out.empty() && out.back() != '|') out += " | ";
    } else {
      out += ch;
    }
  }
  while (!out.empty() && (out.back() == ' ' || out.back() == '|')) out.pop_back();
  return out;
}

} // namespace

SearchConfig parse_search_config(const std::string& text) {
  SearchConfig cfg;
  std::istringstream is(text);
  std::string line;
  bool have_k = false, have_n = false;
  while (std::getline(is, line)) {
    size_t a = line.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r\n");
    line = line.substr(a, b - a + 1);
    if (line[0] == '#') continue;

    if (line.rfind("field ", 0) == 0) {
      // Modulus is optional here; fall back to the field's default one.
      if (line.find("modulus=") != std::string::npos) {
        cfg.f = parse_field_line(line);
      } else {
        std::istringstream ls(line);
        std::string word, pk, mk;
        ls >> word >> pk >> mk;
        if (pk.rfind("p=", 0) != 0 || mk.rfind("m=", 0) != 0)
          fail(errc::parse_error, "bad field line in config");
        cfg.f = make_field(static_cast<uint32_t>(cfg_uint(pk.substr(2), "p")),
                           static_cast<uint32_t>(cfg_uint(mk.substr(2), "m")));
      }
      continue;
    }

    size_t eq = line.find('=');
    if (eq == std::string::npos) fail(errc::parse_error, "expected key=value in config: " + line);
    std::string key = line.substr(0, eq), val = line.substr(eq + 1);
    if (key == "k") {
      cfg.k = static_cast<uint32_t>(cfg_uint(val, "k"));
      have_k = true;
    } else if (key == "n") {
      cfg.n = static_cast<uint32_t>(cfg_uint(val, "n"));
      have_n = true;
    } else if (key == "target") {
      cfg.target = val;
    } else if (key == "dims") {
      if (val == "any") {
        cfg.dims.reset();
      } else {
        std::vector<uint32_t> dims;
        std::istringstream ds(val);
        std::string tok;
        while (std::getline(ds, tok, ',')) dims.push_back(static_cast<uint32_t>(cfg_uint(tok, "dims")));
        cfg.dims = std::move(dims);
      }
    } else if (key == "codes") {
      if (val == "exhaustive") cfg.codes_exhaustive = true;
      else if (val == "random") cfg.codes_exhaustive = false;
      else fail(errc::parse_error, "codes must be exhaustive or random");
    } else if (key == "defining") {
      if (val == "auto") cfg.defining = SearchConfig::defining_pool::auto_pick;
      else if (val == "exhaustive") cfg.defining = SearchConfig::defining_pool::exhaustive;
      else if (val == "random") cfg.defining = SearchConfig::defining_pool::random;
      else if (val == "gram") cfg.defining = SearchConfig::defining_pool::gram;
      else fail(errc::parse_error, "defining must be auto, exhaustive, random or gram");
    } else if (key == "code_samples") {
      cfg.code_samples = static_cast<uint32_t>(cfg_uint(val, "code_samples"));
    } else if (key == "defining_samples") {
      cfg.defining_samples = static_cast<uint32_t>(cfg_uint(val, "defining_samples"));
    } else if (key == "max_hits") {
      cfg.max_hits = static_cast<uint32_t>(cfg_uint(val, "max_hits"));
    } else if (key == "max_candidates") {
      cfg.max_candidates = cfg_uint(val, "max_candidates");
    } else if (key == "seed") {
      cfg.seed = cfg_uint(val, "seed");
    } else if (key == "cap") {
      cfg.cap = cfg_uint(val, "cap");
    } else {
      fail(errc::parse_error, "unknown config key: " + key);
    }
  }
  if (!cfg.f) fail(errc::parse_error, "config needs a field line");
  if (!have_k || !have_n) fail(errc::parse_error, "config needs k and n");
  if (cfg.k == 0 || cfg.n == 0) fail(errc::out_of_range, "k and n must be positive");
  if (cfg.target.empty()) fail(errc::parse_error, "config needs a target flag");
  if (!known_target(cfg.target)) fail(errc::parse_error, "unknown target flag: " + cfg.target);
  if (cfg.dims && cfg.dims->size() != cfg.k)
    fail(errc::parse_error, "dims must list one dimension per constituent");
  return cfg;
}

namespace {

// Iterate over tuples of codes: exhaustive k-fold product of a pool, or
// seeded random draws. Returns false once the supply ends.
class TupleSource {
public:
  TupleSource(const SearchConfig& cfg, Rng& rng) : cfg_(cfg), rng_(rng) {
    if (cfg.codes_exhaustive) {
      if (cfg.dims) {
        for (uint32_t i = 0; i < cfg.k; ++i)
          pools_.push_back(enumerate_codes(cfg.f, cfg.n, (*cfg.dims)[i], cfg.cap));
      } else {
        pools_.assign(cfg.k, enumerate_all_codes(cfg.f, cfg.n, cfg.cap));
      }
      index_.assign(cfg.k, 0);
    }
  }

  bool next(std::vector<LinearCode>& out) {
    out.clear();
    if (cfg_.codes_exhaustive) {
      if (done_) return false;
      for (uint32_t i = 0; i < cfg_.k; ++i) out.push_back(pools_[i][index_[i]]);
      // Odometer, last constituent fastest.
      uint32_t i = cfg_.k;
      while (i > 0) {
        --i;
        if (++index_[i] < pools_[i].size()) break;
        index_[i] = 0;
        if (i == 0) done_ = true;
      }
      return true;
    }
    if (drawn_ == cfg_.code_samples) return false;
    ++drawn_;
    for (uint32_t i = 0; i < cfg_.k; ++i) {
      uint32_t t = cfg_.dims ? (*cfg_.dims)[i] : rng_.uniform(cfg_.n + 1);
      out.push_back(random_code(rng_, cfg_.f, cfg_.n, t));
    }
    return true;
  }

private:
  const SearchConfig& cfg_;
  Rng& rng_;
  std::vector<std::vector<LinearCode>> pools_;
  std::vector<size_t> index_;
  bool done_ = false;
  uint32_t drawn_ = 0;
};

} // namespace

SearchResult run_search(const SearchConfig& cfg) {
  Rng rng(cfg.seed);
  SearchResult res;
  res.target = cfg.target;

  auto mode = cfg.defining;
  if (mode == SearchConfig::defining_pool::auto_pick) {
    uint64_t space = 1;
    bool small = true;
    for (uint32_t i = 0; i < cfg.k * cfg.k && small; ++i) {
      space *= cfg.f->order();
      small = space <= (1ull << 26);
    }
    mode = small ? SearchConfig::defining_pool::exhaustive : SearchConfig::defining_pool::gram;
  }
  std::vector<Matrix> defs;
  switch (mode) {
    case SearchConfig::defining_pool::exhaustive:
      defs = all_gram_monomial_matrices(cfg.f, cfg.k);
      break;
    case SearchConfig::defining_pool::random:
    case SearchConfig::defining_pool::gram: {
      Rng drng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
      while (defs.size() < cfg.defining_samples) {
        Matrix m = mode == SearchConfig::defining_pool::gram
                       ? random_gram_monomial_defining(drng, cfg.f, cfg.k, cfg.k)
                       : random_matrix(drng, cfg.f, cfg.k, cfg.k);
        if (is_monomial(gram_hermitian(m))) defs.push_back(std::move(m));
      }
      break;
    }
    case SearchConfig::defining_pool::auto_pick: break; // resolved above
  }

  std::vector<LinearCode> codes;
  TupleSource tuples(cfg, rng);
  while (tuples.next(codes)) {
    for (const Matrix& a : defs) {
      if (res.candidates >= cfg.max_candidates) {
        res.exhausted = false;
        break;
      }
      ++res.candidates;
      MPSpec spec = make_mpspec(a, codes);
      Classification c = classify(spec);
      if (flag_of(c, cfg.target)) res.hits.push_back({std::move(spec), std::move(c)});
    }
    if (!res.exhausted || res.hits.size() >= cfg.max_hits) break;
  }
  if (res.hits.size() > cfg.max_hits) res.hits.resize(cfg.max_hits);

  std::sort(res.hits.begin(), res.hits.end(), [](const SearchHit& x, const SearchHit& y) {
    return format_mpspec(x.spec) < format_mpspec(y.spec);
  });

  // Replay each hit through the parser and classifier before reporting it.
  for (const SearchHit& h : res.hits) {
    MPSpec replay = parse_mpspec(format_mpspec(h.spec));
    if (!flag_of(classify(replay), cfg.target))
      fail(errc::internal, "hit failed to replay");
  }
  return res;
}

Report search_report(const SearchResult& res) {
  Report r;
  r.emplace_back("target", res.target);
  r.emplace_back("candidates", std::to_string(res.candidates));
  r.emplace_back("exhausted", bool_token(res.exhausted));
  r.emplace_back("hits", std::to_string(res.hits.size()));
  for (size_t i = 0; i < res.hits.size(); ++i) {
    std::string p = "hit." + std::to_string(i + 1);
    r.emplace_back(p + ".tau", format_perm(res.hits[i].cls.tau));
    r.emplace_back(p + ".hull_dim", std::to_string(res.hits[i].cls.hull_dim));
    r.emplace_back(p + ".spec", oneline(format_mpspec(res.hits[i].spec)));
  }
  return r;
}

} // namespace mpkit
