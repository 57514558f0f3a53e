#include "io.hpp"

#include <sstream>

namespace mpkit {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Walks the meaningful lines of a document.
class LineReader {
public:
  explicit LineReader(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      line = trim(line);
      if (line.empty() || line[0] == '#') continue;
      lines_.push_back(line);
    }
  }

  bool done() const { return pos_ >= lines_.size(); }
  const std::string& peek() const {
    if (done()) fail(errc::parse_error, "unexpected end of input");
    return lines_[pos_];
  }
  std::string next() {
    std::string l = peek();
    ++pos_;
    return l;
  }

private:
  std::vector<std::string> lines_;
  size_t pos_ = 0;
};

uint64_t parse_uint(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    fail(errc::parse_error, std::string("expected a number for ") + what);
  return std::stoull(s);
}

std::vector<uint32_t> parse_csv(const std::string& s, const char* what) {
  std::vector<uint32_t> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ','))
    out.push_back(static_cast<uint32_t>(parse_uint(trim(tok), what)));
  if (out.empty()) fail(errc::parse_error, std::string("empty list for ") + what);
  return out;
}

// "key=value" tokens separated by spaces, after an expected leading word.
std::vector<std::pair<std::string, std::string>> parse_tagged(const std::string& line,
                                                              const std::string& tag) {
  std::istringstream is(line);
  std::string word;
  if (!(is >> word) || word != tag)
    fail(errc::parse_error, "expected a '" + tag + "' line, got: " + line);
  std::vector<std::pair<std::string, std::string>> kv;
  while (is >> word) {
    size_t eq = word.find('=');
    if (eq == std::string::npos) fail(errc::parse_error, "expected key=value, got: " + word);
    kv.emplace_back(word.substr(0, eq), word.substr(eq + 1));
  }
  return kv;
}

std::string find_kv(const std::vector<std::pair<std::string, std::string>>& kv,
                    const std::string& key) {
  for (const auto& [k, v] : kv)
    if (k == key) return v;
  fail(errc::parse_error, "missing '" + key + "'");
}

// "rows=<r> cols=<c>" without a leading word.
std::pair<uint32_t, uint32_t> parse_dims(const std::string& line) {
  auto kv = parse_tagged("dims " + line, "dims");
  return {static_cast<uint32_t>(parse_uint(find_kv(kv, "rows"), "rows")),
          static_cast<uint32_t>(parse_uint(find_kv(kv, "cols"), "cols"))};
}

Matrix read_matrix_body(LineReader& r, const FieldPtr& f) {
  auto [rows, cols] = parse_dims(r.next());
  std::vector<uint32_t> data;
  data.reserve(static_cast<size_t>(rows) * cols);
  for (uint32_t i = 0; i < rows; ++i) {
    auto vals = parse_csv(r.next(), "matrix row");
    if (vals.size() != cols) fail(errc::parse_error, "matrix row has the wrong number of entries");
    data.insert(data.end(), vals.begin(), vals.end());
  }
  return Matrix(f, rows, cols, std::move(data));
}

uint32_t read_code_header(LineReader& r) {
  auto kv = parse_tagged(r.next(), "code");
  return static_cast<uint32_t>(parse_uint(find_kv(kv, "n"), "n"));
}

void append_matrix_body(std::ostringstream& os, const Matrix& m) {
  os << "rows=" << m.rows() << " cols=" << m.cols() << "\n";
  for (uint32_t i = 0; i < m.rows(); ++i) {
    for (uint32_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << "\n";
  }
}

} // namespace

std::string format_field_line(const FieldPtr& f) {
  std::ostringstream os;
  os << "field p=" << f->p() << " m=" << f->m() << " modulus=";
  for (size_t i = 0; i < f->modulus().size(); ++i) os << (i ? "," : "") << f->modulus()[i];
  return os.str();
}

FieldPtr parse_field_line(const std::string& line) {
  auto kv = parse_tagged(line, "field");
  uint32_t p = static_cast<uint32_t>(parse_uint(find_kv(kv, "p"), "p"));
  uint32_t m = static_cast<uint32_t>(parse_uint(find_kv(kv, "m"), "m"));
  auto modulus = parse_csv(find_kv(kv, "modulus"), "modulus");
  return make_field(p, m, modulus);
}

std::string format_matrix(const Matrix& m) {
  std::ostringstream os;
  os << format_field_line(m.field()) << "\n";
  append_matrix_body(os, m);
  return os.str();
}

Matrix parse_matrix(const std::string& text) {
  LineReader r(text);
  FieldPtr f = parse_field_line(r.next());
  Matrix m = read_matrix_body(r, f);
  if (!r.done()) fail(errc::parse_error, "trailing content after matrix");
  return m;
}

std::string format_code(const LinearCode& c) {
  std::ostringstream os;
  os << "code n=" << c.length() << "\n" << format_matrix(c.generator());
  return os.str();
}

LinearCode parse_code(const std::string& text) {
  LineReader r(text);
  uint32_t n = read_code_header(r);
  FieldPtr f = parse_field_line(r.next());
  Matrix m = read_matrix_body(r, f);
  if (m.cols() != n) fail(errc::parse_error, "code length does not match its generator");
  if (!r.done()) fail(errc::parse_error, "trailing content after code");
  return make_code(m);
}

std::string format_mpspec(const MPSpec& s) {
  std::ostringstream os;
  os << format_field_line(s.a.field()) << "\n";
  os << "defining\n";
  append_matrix_body(os, s.a);
  for (const auto& c : s.codes) {
    os << "code n=" << c.length() << "\n";
    append_matrix_body(os, c.generator());
  }
  return os.str();
}

MPSpec parse_mpspec(const std::string& text) {
  LineReader r(text);
  FieldPtr f = parse_field_line(r.next());
  if (r.next() != "defining") fail(errc::parse_error, "expected 'defining'");
  Matrix a = read_matrix_body(r, f);
  std::vector<LinearCode> codes;
  for (uint32_t i = 0; i < a.rows(); ++i) {
    uint32_t n = read_code_header(r);
    Matrix g = read_matrix_body(r, f);
    if (g.cols() != n) fail(errc::parse_error, "code length does not match its generator");
    codes.push_back(make_code(g));
  }
  if (!r.done()) fail(errc::parse_error, "trailing content after spec");
  return make_mpspec(std::move(a), std::move(codes));
}

std::string render_report(const Report& r) {
  std::ostringstream os;
  for (const auto& [k, v] : r) os << k << "=" << v << "\n";
  return os.str();
}

const char* errc_token(errc k) {
  switch (k) {
    case errc::parse_error: return "parse_error";
    case errc::mismatch: return "mismatch";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::division_by_zero: return "division_by_zero";
    case errc::not_hermitian: return "not_hermitian";
    case errc::not_monomial: return "not_monomial";
    case errc::not_involution: return "not_involution";
    case errc::cap_exceeded: return "cap_exceeded";
    case errc::out_of_range: return "out_of_range";
    case errc::inapplicable: return "inapplicable";
    case errc::internal: return "internal";
  }
  return "internal";
}

std::string bool_token(bool b) { return b ? "true" : "false"; }

Report classification_report(const MPSpec& s, const Classification& c) {
  Report r;
  r.emplace_back("tau", format_perm(c.tau));
  r.emplace_back("hull_dim", std::to_string(c.hull_dim));
  r.emplace_back("dim", std::to_string(c.dim));
  r.emplace_back("dual_dim", std::to_string(c.dual_dim));
  for (uint32_t i = 0; i < s.k(); ++i)
    r.emplace_back("meet." + std::to_string(i + 1), std::to_string(c.meet_dim[i]));
  r.emplace_back("flag.HDC", bool_token(c.hdc));
  r.emplace_back("flag.AHDC", bool_token(c.ahdc));
  r.emplace_back("flag.HSO", bool_token(c.hso));
  r.emplace_back("flag.AHSO", bool_token(c.ahso));
  r.emplace_back("flag.HLCD", bool_token(c.hlcd));
  return r;
}

Report screen_report(const ScreenResult& sr) {
  Report r;
  r.emplace_back("obstruction.no_fixed_points", bool_token(sr.no_fixed_points));
  r.emplace_back("obstruction.ahdc_parity", bool_token(sr.ahdc_parity));
  r.emplace_back("obstruction.ahso_parity", bool_token(sr.ahso_parity));
  r.emplace_back("obstruction.ahdc_fixed_all_self_orthogonal",
                 bool_token(sr.ahdc_fixed_all_self_orthogonal));
  r.emplace_back("obstruction.ahso_fixed_all_dual_containing",
                 bool_token(sr.ahso_fixed_all_dual_containing));
  r.emplace_back("screen.ahdc_ruled_out", bool_token(sr.ahdc_ruled_out()));
  r.emplace_back("screen.ahso_ruled_out", bool_token(sr.ahso_ruled_out()));
  return r;
}

Report bound_report(const BoundResult& b) {
  Report r;
  r.emplace_back("bound", std::to_string(b.value));
  r.emplace_back("bound.method", b.method == bound_method::prefix ? "prefix" : "nsc");
  return r;
}

Report quantum_report(const QuantumParams& qp) {
  Report r;
  r.emplace_back("quantum.length", std::to_string(qp.length));
  r.emplace_back("quantum.dim", std::to_string(qp.dim));
  r.emplace_back("quantum.distance", std::to_string(qp.distance));
  r.emplace_back("quantum.distance_exact", bool_token(qp.distance_exact));
  r.emplace_back("quantum.q", std::to_string(qp.q));
  r.emplace_back("quantum.construction", "hermitian");
  return r;
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "; ";
    out += parts[i];
  }
  return out;
}

} // namespace

Report table_report(uint32_t k) {
  auto rows = classification_table(k);
  Report r;
  r.emplace_back("count", std::to_string(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    std::string p = "row." + std::to_string(i + 1);
    r.emplace_back(p + ".tau", format_perm(rows[i].tau));
    r.emplace_back(p + ".dual_containing", join(rows[i].dual_containing));
    r.emplace_back(p + ".self_orthogonal", join(rows[i].self_orthogonal));
  }
  return r;
}

Report involutions_report(uint32_t k) {
  auto invs = enumerate_involutions(k);
  Report r;
  r.emplace_back("count", std::to_string(invs.size()));
  for (size_t i = 0; i < invs.size(); ++i)
    r.emplace_back("involution." + std::to_string(i + 1), format_perm(invs[i]));
  return r;
}

} // namespace mpkit
