#include "mp.hpp"

#include <algorithm>

namespace mpkit {

uint32_t MPSpec::dim_sum() const {
  uint32_t t = 0;
  for (const auto& c : codes) t += c.dim();
  return t;
}

MPSpec make_mpspec(Matrix a, std::vector<LinearCode> codes) {
  if (codes.empty()) fail(errc::dimension_mismatch, "need at least one constituent code");
  if (a.rows() != codes.size())
    fail(errc::dimension_mismatch, "defining matrix needs one row per constituent code");
  if (a.cols() == 0) fail(errc::dimension_mismatch, "defining matrix needs at least one column");
  for (const auto& c : codes) {
    if (!same_field(a.field(), c.field()))
      fail(errc::mismatch, "constituent code over a different field");
    if (c.length() != codes.front().length())
      fail(errc::mismatch, "constituent codes must share a length");
  }
  return MPSpec{std::move(a), std::move(codes)};
}

LinearCode build(const MPSpec& s) {
  Matrix gen(s.a.field(), 0, s.length());
  for (uint32_t i = 0; i < s.k(); ++i)
    gen = stack_rows(gen, kronecker(row(s.a, i), s.codes[i].generator()));
  return make_code(gen);
}

HullData hull_data(const MPSpec& s) {
  MonomialDecomposition d = monomial_decompose(gram_hermitian(s.a));
  HullData h;
  h.tau = d.tau;
  h.mu = d.mu;
  h.meet_dim.resize(s.k());
  for (uint32_t i = 0; i < s.k(); ++i) {
    h.meet_dim[i] = meet_hermitian_dual_dim(s.codes[i], s.codes[h.tau(i)]);
    h.hull_dim += h.meet_dim[i];
  }
  return h;
}

uint32_t hull_dim_formula(const MPSpec& s) { return hull_data(s).hull_dim; }

namespace {

Classification classify_from(const MPSpec& s, const HullData& h) {
  Classification c;
  c.tau = h.tau;
  c.meet_dim = h.meet_dim;
  c.hull_dim = h.hull_dim;
  c.dim = s.dim_sum();
  c.dual_dim = s.length() - c.dim;
  c.hdc = c.hull_dim == c.dual_dim;
  c.hso = c.hull_dim == c.dim;
  c.ahdc = static_cast<int64_t>(c.hull_dim) == static_cast<int64_t>(c.dual_dim) - 1;
  c.ahso = static_cast<int64_t>(c.hull_dim) == static_cast<int64_t>(c.dim) - 1;
  c.hlcd = c.hull_dim == 0;

  uint32_t n = s.inner_length();
  c.hdc_at.resize(s.k());
  c.hso_at.resize(s.k());
  for (uint32_t i = 0; i < s.k(); ++i) {
    c.hdc_at[i] = h.meet_dim[i] == n - s.codes[h.tau(i)].dim();
    c.hso_at[i] = h.meet_dim[i] == s.codes[i].dim();
  }
  if (s.k() == s.blocks()) {
    // For a square defining matrix the aggregate flags decompose into the
    // per-index containments; a disagreement would be a bug, not an input.
    bool all_hdc = std::all_of(c.hdc_at.begin(), c.hdc_at.end(), [](bool b) { return b; });
    bool all_hso = std::all_of(c.hso_at.begin(), c.hso_at.end(), [](bool b) { return b; });
    if (all_hdc != c.hdc || all_hso != c.hso)
      fail(errc::internal, "per-index containments disagree with hull dimensions");
  }
  return c;
}

} // namespace

Classification classify(const MPSpec& s) { return classify_from(s, hull_data(s)); }

Classification classify_explicit(const MPSpec& s) {
  if (s.k() != s.blocks())
    fail(errc::inapplicable, "transposition tallies need a square defining matrix");
  HullData h = hull_data(s);
  uint32_t n = s.inner_length();
  auto pairs = two_cycles(h.tau);
  auto fixed = fixed_points(h.tau);

  // Reassemble the hull dimension from one meet per transposition, using
  // dim(C_j meet dual(C_i)) = t_j - t_i + dim(C_i meet dual(C_j)).
  int64_t hull = 0;
  for (auto [i, j] : pairs)
    hull += 2 * static_cast<int64_t>(h.meet_dim[i]) + s.codes[j].dim() - s.codes[i].dim();
  for (uint32_t i : fixed) hull += h.meet_dim[i];

  Classification c;
  c.tau = h.tau;
  c.meet_dim = h.meet_dim;
  c.hull_dim = static_cast<uint32_t>(hull);
  c.dim = s.dim_sum();
  c.dual_dim = s.length() - c.dim;
  c.hlcd = hull == 0;

  // Dual-containing / self-orthogonal demand every transposition and fixed
  // point to contribute its full possible meet.
  c.hdc = true;
  c.hso = true;
  c.hdc_at.resize(s.k());
  c.hso_at.resize(s.k());
  for (uint32_t i = 0; i < s.k(); ++i) {
    c.hdc_at[i] = h.meet_dim[i] == n - s.codes[h.tau(i)].dim();
    c.hso_at[i] = h.meet_dim[i] == s.codes[i].dim();
    c.hdc = c.hdc && c.hdc_at[i];
    c.hso = c.hso && c.hso_at[i];
  }

  // The "almost" classes: the deficit tally across transpositions and fixed
  // points equals one exactly.
  int64_t ahdc_tally = 0, ahso_tally = 0;
  for (auto [i, j] : pairs) {
    int64_t dual_j = static_cast<int64_t>(n) - s.codes[j].dim();
    ahdc_tally += 2 * (dual_j - h.meet_dim[i]);
    ahso_tally += 2 * (static_cast<int64_t>(s.codes[i].dim()) - h.meet_dim[i]);
  }
  for (uint32_t i : fixed) {
    ahdc_tally += static_cast<int64_t>(n) - s.codes[i].dim() - h.meet_dim[i];
    ahso_tally += static_cast<int64_t>(s.codes[i].dim()) - h.meet_dim[i];
  }
  c.ahdc = ahdc_tally == 1;
  c.ahso = ahso_tally == 1;
  return c;
}

bool same_flags(const Classification& x, const Classification& y) {
  return x.hdc == y.hdc && x.ahdc == y.ahdc && x.hso == y.hso && x.ahso == y.ahso &&
         x.hlcd == y.hlcd;
}

bool ahdc_alt_check(const MPSpec& s) {
  if (s.k() != s.blocks())
    fail(errc::inapplicable, "tally characterization needs a square defining matrix");
  HullData h = hull_data(s);
  int64_t tally = 0;
  for (auto [i, j] : two_cycles(h.tau))
    tally += 2 * (static_cast<int64_t>(s.codes[j].dim()) + h.meet_dim[i]);
  for (uint32_t i : fixed_points(h.tau))
    tally += static_cast<int64_t>(s.codes[i].dim()) + h.meet_dim[i];
  return tally == static_cast<int64_t>(s.k()) * s.inner_length() - 1;
}

bool ahso_alt_check(const MPSpec& s) {
  if (s.k() != s.blocks())
    fail(errc::inapplicable, "tally characterization needs a square defining matrix");
  HullData h = hull_data(s);
  uint32_t n = s.inner_length();
  int64_t tally = 0;
  for (auto [i, j] : two_cycles(h.tau))
    tally += 2 * (static_cast<int64_t>(n) - s.codes[i].dim() + h.meet_dim[i]);
  for (uint32_t i : fixed_points(h.tau))
    tally += static_cast<int64_t>(n) - s.codes[i].dim() + h.meet_dim[i];
  return tally == static_cast<int64_t>(s.k()) * n - 1;
}

ScreenResult nonexistence_screen(const MPSpec& s) {
  if (s.k() != s.blocks())
    fail(errc::inapplicable, "parity screen needs a square defining matrix");
  HullData h = hull_data(s);
  uint32_t k = s.k(), n = s.inner_length();
  auto fixed = fixed_points(h.tau);

  ScreenResult r;
  r.no_fixed_points = fixed.empty();

  // For a fixed index, meet_dim[i] is the constituent's own hull dimension.
  uint64_t sum_primal = 0, sum_dual = 0;
  bool all_so = true, all_dc = true;
  for (uint32_t i : fixed) {
    uint32_t t = s.codes[i].dim(), hull = h.meet_dim[i];
    sum_primal += t + hull;
    sum_dual += (n - t) + hull;
    all_so = all_so && hull == t;
    all_dc = all_dc && hull == n - t;
  }

  bool both_odd = (k % 2 == 1) && (n % 2 == 1);
  r.ahdc_parity = both_odd ? (sum_primal % 2 == 1) : (sum_primal % 2 == 0);
  r.ahso_parity = both_odd ? (sum_dual % 2 == 1) : (sum_dual % 2 == 0);
  r.ahdc_fixed_all_self_orthogonal = !fixed.empty() && !both_odd && all_so;
  r.ahso_fixed_all_dual_containing = !fixed.empty() && !both_odd && all_dc;
  return r;
}

BoundResult distance_bound(const MPSpec& s, bound_method method, uint64_t cap) {
  if (rank(s.a) != s.k())
    fail(errc::inapplicable, "distance bound needs a defining matrix with independent rows");
  bool any = false;
  uint64_t best = 0;
  for (uint32_t i = 0; i < s.k(); ++i) {
    if (s.codes[i].dim() == 0) continue; // no codeword peaks at a zero constituent
    uint64_t factor;
    if (method == bound_method::prefix) {
      factor = row_prefix_distance(s.a, i + 1, cap).value;
    } else {
      if (!is_nsc(s.a)) fail(errc::inapplicable, "defining matrix is not non-singular by columns");
      factor = s.blocks() - i;
    }
    uint64_t v = factor * min_distance(s.codes[i], cap).value;
    if (!any || v < best) best = v;
    any = true;
  }
  if (!any) fail(errc::inapplicable, "all constituent codes are zero");
  return {static_cast<uint32_t>(best), method};
}

QuantumParams quantum_params(const MPSpec& s, uint64_t cap) {
  Classification c = classify(s);
  if (!c.hdc)
    fail(errc::inapplicable, "stabilizer construction needs a Hermitian dual-containing code");
  QuantumParams qp;
  qp.length = s.length();
  qp.dim = 2 * static_cast<int32_t>(c.dim) - static_cast<int32_t>(qp.length);
  qp.q = s.a.field()->q();
  LinearCode built = build(s);
  try {
    qp.distance = min_distance(built, cap).value;
    qp.distance_exact = true;
  } catch (const error& e) {
    if (e.kind() != errc::cap_exceeded) throw;
    qp.distance = distance_bound(s, bound_method::prefix, cap).value;
    qp.distance_exact = false;
  }
  return qp;
}

std::vector<TableRow> classification_table(uint32_t k) {
  std::vector<Perm> taus = enumerate_involutions(k);
  std::sort(taus.begin(), taus.end(), [](const Perm& x, const Perm& y) {
    auto cx = two_cycles(x), cy = two_cycles(y);
    if (cx.size() != cy.size()) return cx.size() < cy.size();
    return cx < cy;
  });
  std::vector<TableRow> rows;
  rows.reserve(taus.size());
  for (const Perm& tau : taus) {
    TableRow row;
    row.tau = tau;
    // One condition per orbit, ordered by the orbit's smallest index.
    for (uint32_t i = 0; i < k; ++i) {
      uint32_t j = tau(i);
      if (j < i) continue;
      std::string ci = "C" + std::to_string(i + 1), cj = "C" + std::to_string(j + 1);
      row.dual_containing.push_back("dualH(" + ci + ") <= " + cj);
      row.self_orthogonal.push_back(ci + " <= dualH(" + cj + ")");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace mpkit
