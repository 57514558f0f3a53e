#pragma once

#include "mp.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mpkit {

// Text formats are line-oriented; blank lines and lines starting with '#'
// are ignored everywhere. A field is one line:
//   field p=2 m=2 modulus=1,1,1        (coefficients constant-term first)
// A matrix is a field line, a "rows=<r> cols=<c>" line, then r comma-
// separated data lines of canonical integers. A code prefixes a matrix with
// "code n=<n>". A matrix-product spec is a single field line, the keyword
// "defining" with the defining matrix's dims and data, then one
// "code n=<n>" block per constituent, field lines omitted inside.

std::string format_field_line(const FieldPtr& f);
FieldPtr parse_field_line(const std::string& line);

std::string format_matrix(const Matrix& m);
Matrix parse_matrix(const std::string& text);

std::string format_code(const LinearCode& c);
LinearCode parse_code(const std::string& text);

std::string format_mpspec(const MPSpec& s);
MPSpec parse_mpspec(const std::string& text);

// Machine-readable reports: one key=value per line, in emission order.
using Report = std::vector<std::pair<std::string, std::string>>;
std::string render_report(const Report& r);
const char* errc_token(errc k);
std::string bool_token(bool b);

Report classification_report(const MPSpec& s, const Classification& c);
Report screen_report(const ScreenResult& r);
Report bound_report(const BoundResult& b);
Report quantum_report(const QuantumParams& qp);
Report table_report(uint32_t k);
Report involutions_report(uint32_t k);

} // namespace mpkit
