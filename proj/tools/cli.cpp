// Command-line front end; everything goes through the C API in mpkit.h.

#include "mpkit.h"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

bool g_machine = false;

const char* status_token(mpkit_status st) {
  switch (st) {
  case MPKIT_OK: return "ok";
  case MPKIT_ERR_PARSE: return "parse_error";
  case MPKIT_ERR_MISMATCH: return "mismatch";
  case MPKIT_ERR_DIMENSION: return "dimension_mismatch";
  case MPKIT_ERR_DIVISION_BY_ZERO: return "division_by_zero";
  case MPKIT_ERR_NOT_HERMITIAN: return "not_hermitian";
  case MPKIT_ERR_NOT_MONOMIAL: return "not_monomial";
  case MPKIT_ERR_NOT_INVOLUTION: return "not_involution";
  case MPKIT_ERR_CAP_EXCEEDED: return "cap_exceeded";
  case MPKIT_ERR_OUT_OF_RANGE: return "out_of_range";
  case MPKIT_ERR_INAPPLICABLE: return "inapplicable";
  case MPKIT_ERR_INTERNAL: return "internal";
  }
  return "internal";
}

// key=value lines pass through in machine mode and become "key: value" in
// human mode; lines without '=' (code/matrix bodies) pass through either way.
void print_text(const std::string& text) {
  if (g_machine) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto eq = line.find('=');
    if (eq == std::string::npos)
      std::cout << line << '\n';
    else
      std::cout << line.substr(0, eq) << ": " << line.substr(eq + 1) << '\n';
  }
}

int fail_with(mpkit_status st) {
  if (g_machine) std::cout << "error=" << status_token(st) << '\n';
  std::cerr << "error: " << mpkit_last_error() << '\n';
  return 1;
}

// "-" reads standard input.
bool read_input(const std::string& path, std::string& out) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) return false;
    ss << in.rdbuf();
  }
  out = ss.str();
  return true;
}

int unreadable(const std::string& path) {
  std::cerr << "error: cannot read " << path << '\n';
  return 2;
}

struct owned_string {
  char* p = nullptr;
  ~owned_string() { mpkit_string_free(p); }
  owned_string() = default;
  owned_string(const owned_string&) = delete;
  owned_string& operator=(const owned_string&) = delete;
  std::string str() const { return p ? std::string(p) : std::string(); }
};

template <class T, void (*Free)(T*)> struct handle_delete {
  void operator()(T* t) const { Free(t); }
};
using spec_ptr = std::unique_ptr<mpkit_mpspec, handle_delete<mpkit_mpspec, mpkit_mpspec_free>>;
using code_ptr = std::unique_ptr<mpkit_code, handle_delete<mpkit_code, mpkit_code_free>>;

int parse_spec(const std::string& path, spec_ptr& out) {
  std::string text;
  if (!read_input(path, text)) return unreadable(path);
  mpkit_mpspec* raw = nullptr;
  mpkit_status st = mpkit_mpspec_parse(text.c_str(), &raw);
  if (st != MPKIT_OK) return fail_with(st);
  out.reset(raw);
  return 0;
}

std::string prefix_lines(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) out += prefix + line + "\n";
  return out;
}

int run_classify(const std::string& path, bool explicit_route, bool brute, bool screen,
                 uint64_t cap) {
  spec_ptr spec;
  if (int rc = parse_spec(path, spec)) return rc;
  owned_string rep;
  mpkit_status st = mpkit_mpspec_classify(spec.get(), explicit_route ? 1 : 0, &rep.p);
  if (st != MPKIT_OK) return fail_with(st);
  std::string out = rep.str();
  if (brute) {
    owned_string b;
    st = mpkit_mpspec_brute_classify(spec.get(), cap, &b.p);
    if (st != MPKIT_OK) return fail_with(st);
    out += prefix_lines(b.str(), "brute.");
  }
  if (screen) {
    owned_string s;
    st = mpkit_mpspec_screen(spec.get(), &s.p);
    if (st != MPKIT_OK) return fail_with(st);
    out += s.str();
  }
  print_text(out);
  return 0;
}

int run_hull_dim(const std::string& path, bool oracle, uint64_t cap) {
  spec_ptr spec;
  if (int rc = parse_spec(path, spec)) return rc;
  uint32_t dim = 0;
  mpkit_status st = mpkit_mpspec_hull_dim(spec.get(), &dim);
  if (st != MPKIT_OK) return fail_with(st);
  std::string out = "hull_dim=" + std::to_string(dim) + "\n";
  if (oracle) {
    uint32_t ref = 0;
    st = mpkit_mpspec_brute_hull_dim(spec.get(), cap, &ref);
    if (st != MPKIT_OK) return fail_with(st);
    out += "oracle=" + std::to_string(ref) + "\n";
    out += "agrees=" + std::string(dim == ref ? "true" : "false") + "\n";
  }
  print_text(out);
  return 0;
}

int run_build(const std::string& path) {
  spec_ptr spec;
  if (int rc = parse_spec(path, spec)) return rc;
  mpkit_code* raw = nullptr;
  mpkit_status st = mpkit_mpspec_build(spec.get(), &raw);
  if (st != MPKIT_OK) return fail_with(st);
  code_ptr code(raw);
  owned_string text;
  st = mpkit_code_format(code.get(), &text.p);
  if (st != MPKIT_OK) return fail_with(st);
  std::cout << text.str();
  return 0;
}

int run_bound(const std::string& path, const std::string& method, uint64_t cap) {
  spec_ptr spec;
  if (int rc = parse_spec(path, spec)) return rc;
  owned_string rep;
  mpkit_status st = mpkit_mpspec_distance_bound(spec.get(), method.c_str(), cap, &rep.p);
  if (st != MPKIT_OK) return fail_with(st);
  print_text(rep.str());
  return 0;
}

int run_qparams(const std::string& path, uint64_t cap) {
  spec_ptr spec;
  if (int rc = parse_spec(path, spec)) return rc;
  owned_string rep;
  mpkit_status st = mpkit_mpspec_quantum(spec.get(), cap, &rep.p);
  if (st != MPKIT_OK) return fail_with(st);
  print_text(rep.str());
  return 0;
}

int run_distance(const std::string& path, uint64_t cap) {
  spec_ptr spec;
  if (int rc = parse_spec(path, spec)) return rc;
  mpkit_code* raw = nullptr;
  mpkit_status st = mpkit_mpspec_build(spec.get(), &raw);
  if (st != MPKIT_OK) return fail_with(st);
  code_ptr code(raw);
  uint32_t value = 0;
  int zero = 0;
  st = mpkit_code_min_distance(code.get(), cap, &value, &zero);
  if (st != MPKIT_OK) return fail_with(st);
  std::string out = "distance=" + std::to_string(value) + "\n";
  out += "zero_code=" + std::string(zero ? "true" : "false") + "\n";
  out += "length=" + std::to_string(mpkit_code_length(code.get())) + "\n";
  out += "dim=" + std::to_string(mpkit_code_dim(code.get())) + "\n";
  print_text(out);
  return 0;
}

int run_involutions(uint32_t k) {
  owned_string rep;
  mpkit_status st = mpkit_involutions_report(k, &rep.p);
  if (st != MPKIT_OK) return fail_with(st);
  print_text(rep.str());
  return 0;
}

int run_table(uint32_t k) {
  owned_string rep;
  mpkit_status st = mpkit_table_report(k, &rep.p);
  if (st != MPKIT_OK) return fail_with(st);
  print_text(rep.str());
  return 0;
}

int run_search(const std::string& path) {
  std::string text;
  if (!read_input(path, text)) return unreadable(path);
  owned_string rep;
  mpkit_status st = mpkit_search_run(text.c_str(), &rep.p);
  if (st != MPKIT_OK) return fail_with(st);
  print_text(rep.str());
  return 0;
}

int run_verify(uint64_t seed, int criterion) {
  owned_string rep;
  int all_pass = 0;
  mpkit_status st = mpkit_verify_run(seed, criterion, &all_pass, &rep.p);
  if (st != MPKIT_OK) return fail_with(st);
  print_text(rep.str());
  return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for matrix-product codes over fields with a conjugation"};
  app.set_version_flag("--version", mpkit_version());
  app.require_subcommand(1);

  std::string format = "human";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"human", "machine"}));
  uint64_t cap = 0;
  app.add_option("--cap", cap, "word-enumeration work cap (0 = default, 2^20)");

  std::string classify_file;
  bool opt_explicit = false, opt_brute = false, opt_screen = false;
  auto* cmd_classify = app.add_subcommand(
      "classify", "hull, dimensions and dual-containment flags of a matrix-product spec");
  cmd_classify->add_option("spec", classify_file, "spec file ('-' for stdin)")->required();
  cmd_classify->add_flag("--explicit", opt_explicit,
                         "derive the flags from the transposition tallies of tau");
  cmd_classify->add_flag("--brute", opt_brute, "append the word-enumeration cross-check");
  cmd_classify->add_flag("--screen", opt_screen, "append the parity-based nonexistence screen");

  std::string hull_file;
  bool opt_oracle = false;
  auto* cmd_hull = app.add_subcommand("hull-dim", "Hermitian hull dimension of the product");
  cmd_hull->add_option("spec", hull_file, "spec file ('-' for stdin)")->required();
  cmd_hull->add_flag("--oracle", opt_oracle, "recompute by word enumeration and compare");

  std::string build_file;
  auto* cmd_build = app.add_subcommand("build", "emit the matrix-product code itself");
  cmd_build->add_option("spec", build_file, "spec file ('-' for stdin)")->required();

  std::string bound_file, bound_method = "prefix";
  auto* cmd_bound = app.add_subcommand("bound", "lower bound on the minimum distance");
  cmd_bound->add_option("spec", bound_file, "spec file ('-' for stdin)")->required();
  cmd_bound->add_option("--method", bound_method, "prefix or nsc")
      ->check(CLI::IsMember({"prefix", "nsc"}));

  std::string dist_file;
  auto* cmd_dist = app.add_subcommand("distance", "exact minimum distance of the product");
  cmd_dist->add_option("spec", dist_file, "spec file ('-' for stdin)")->required();

  std::string q_file;
  auto* cmd_q = app.add_subcommand(
      "qparams", "stabilizer-code parameters from a dual-containing product");
  cmd_q->add_option("spec", q_file, "spec file ('-' for stdin)")->required();

  uint32_t inv_k = 0;
  auto* cmd_inv = app.add_subcommand("involutions", "enumerate the involutions of S_k");
  cmd_inv->add_option("k", inv_k, "number of constituents")->required();

  uint32_t table_k = 0;
  auto* cmd_table = app.add_subcommand(
      "table", "per-involution containment conditions for k constituents");
  cmd_table->add_option("k", table_k, "number of constituents")->required();

  std::string search_file;
  auto* cmd_search = app.add_subcommand("search", "hunt for specs in a target class");
  cmd_search->add_option("config", search_file, "config file ('-' for stdin)")->required();

  uint64_t verify_seed = 1;
  int verify_criterion = 0;
  auto* cmd_verify = app.add_subcommand("verify", "run the self-check battery");
  cmd_verify->add_option("--seed", verify_seed, "corpus seed");
  cmd_verify->add_option("--criterion", verify_criterion, "run one criterion (1..9), 0 = all")
      ->check(CLI::Range(0, 9));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  g_machine = format == "machine";

  if (*cmd_classify) return run_classify(classify_file, opt_explicit, opt_brute, opt_screen, cap);
  if (*cmd_hull) return run_hull_dim(hull_file, opt_oracle, cap);
  if (*cmd_build) return run_build(build_file);
  if (*cmd_bound) return run_bound(bound_file, bound_method, cap);
  if (*cmd_dist) return run_distance(dist_file, cap);
  if (*cmd_q) return run_qparams(q_file, cap);
  if (*cmd_inv) return run_involutions(inv_k);
  if (*cmd_table) return run_table(table_k);
  if (*cmd_search) return run_search(search_file);
  if (*cmd_verify) return run_verify(verify_seed, verify_criterion);
  return 2;
}
