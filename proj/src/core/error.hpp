#pragma once

#include <stdexcept>
#include <string>

namespace mpkit {

// Every recoverable failure in the library is one of these kinds, so the C
// API can map exceptions to stable status codes without string matching.
enum class errc {
  parse_error,
  mismatch,
  dimension_mismatch,
  division_by_zero,
  not_hermitian,
  not_monomial,
  not_involution,
  cap_exceeded,
  out_of_range,
  inapplicable,
  internal,
};

class error : public std::runtime_error {
public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const { return kind_; }

private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

} // namespace mpkit
