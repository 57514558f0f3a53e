#pragma once

#include "monomial.hpp"

#include <string>

namespace mpkit {

// A matrix-product construction: k constituent codes of a common length n
// over one field, mixed by a k x l defining matrix. The resulting code has
// length l*n; block j of a codeword is sum_i a(i,j) c_i.
struct MPSpec {
  Matrix a;
  std::vector<LinearCode> codes;

  uint32_t k() const { return a.rows(); }
  uint32_t blocks() const { return a.cols(); }
  uint32_t inner_length() const { return codes.empty() ? 0 : codes.front().length(); }
  uint32_t length() const { return blocks() * inner_length(); }
  // sum of constituent dimensions; equals the code dimension whenever the
  // defining matrix has independent rows.
  uint32_t dim_sum() const;
};

MPSpec make_mpspec(Matrix a, std::vector<LinearCode> codes);

// Generator: rows a_i (x) G_i stacked over i, then canonicalized.
LinearCode build(const MPSpec& s);

// The data every hull/classification statement runs on: A A-dagger must be
// monomial, giving an involution tau and scalars mu; meet_dim[i] is
// dim(C_i meet hermitian-dual(C_tau(i))), computed by the rank shortcut.
struct HullData {
  Perm tau;
  std::vector<uint32_t> mu;
  std::vector<uint32_t> meet_dim;
  uint32_t hull_dim = 0; // sum of meet_dim
};

HullData hull_data(const MPSpec& s);
uint32_t hull_dim_formula(const MPSpec& s);

struct Classification {
  uint32_t hull_dim = 0;
  uint32_t dim = 0;      // sum t_i
  uint32_t dual_dim = 0; // l*n - sum t_i
  bool hdc = false, ahdc = false, hso = false, ahso = false, hlcd = false;
  Perm tau;
  std::vector<uint32_t> meet_dim;
  // Per-index containments behind the all-or-nothing flags (square case):
  // hdc_at[i] says hermitian-dual(C_tau(i)) <= C_i, hso_at[i] says
  // C_i <= hermitian-dual(C_tau(i)).
  std::vector<bool> hdc_at, hso_at;
};

bool same_flags(const Classification& x, const Classification& y);

// Flags from comparing the hull dimension against dim and dual dim.
Classification classify(const MPSpec& s);
// Same flags reached through the transposition/fixed-point tallies of tau;
// square defining matrices only.
Classification classify_explicit(const MPSpec& s);

// Alternative single-number characterizations of the "almost" classes for a
// square defining matrix: each tally must equal k*n - 1.
bool ahdc_alt_check(const MPSpec& s);
bool ahso_alt_check(const MPSpec& s);

// Parity-based nonexistence screen for the "almost" classes. Each named
// obstruction is reported separately; ruled_out aggregates them.
struct ScreenResult {
  bool no_fixed_points = false;            // tau fixed-point-free kills both
  bool ahdc_parity = false;                // fixed-index dim+hull sum has the wrong parity
  bool ahso_parity = false;                // same with dual dims
  bool ahdc_fixed_all_self_orthogonal = false; // every fixed constituent HSO, k or n even
  bool ahso_fixed_all_dual_containing = false; // every fixed constituent HDC, k or n even
  bool ahdc_ruled_out() const {
    return no_fixed_points || ahdc_parity || ahdc_fixed_all_self_orthogonal;
  }
  bool ahso_ruled_out() const {
    return no_fixed_points || ahso_parity || ahso_fixed_all_dual_containing;
  }
};

ScreenResult nonexistence_screen(const MPSpec& s);

enum class bound_method { prefix, nsc };

struct BoundResult {
  uint32_t value = 0;
  bound_method method = bound_method::prefix;
};

// Lower bound on the built code's minimum distance: min over nonzero
// constituents of d(C_i) times the distance of the span of the first i rows
// of A (prefix), or times (l - i + 1) when A is non-singular by columns.
BoundResult distance_bound(const MPSpec& s, bound_method method, uint64_t cap = 1ull << 20);

struct QuantumParams {
  uint32_t length = 0;
  int32_t dim = 0;
  uint32_t distance = 0;
  bool distance_exact = false; // exact enumeration vs. the prefix bound
  uint32_t q = 0;              // subfield size: parameters are over GF(q)
};

// Parameters of the stabilizer code obtained from a Hermitian dual-containing
// matrix-product code: [[l*n, 2*dim - l*n, >= d]] over GF(q).
QuantumParams quantum_params(const MPSpec& s, uint64_t cap = 1ull << 20);

// One row of the classification table for k constituents: an involution
// together with the containments that make the product dual-containing
// (resp. self-orthogonal) in that manner.
struct TableRow {
  Perm tau;
  std::vector<std::string> dual_containing; // e.g. "dualH(C1) <= C2"
  std::vector<std::string> self_orthogonal; // e.g. "C1 <= dualH(C2)"
};

// Rows ordered by number of transpositions, then by transposition list.
std::vector<TableRow> classification_table(uint32_t k);

} // namespace mpkit
