#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace epsalg {

/// Exact rational. GMP keeps arithmetic results in lowest terms with a
/// positive denominator.
using Scalar = mpq_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "p" or "p/q" (optional leading sign). Decimal points, exponents and
/// zero denominators are rejected.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& value);

}  // namespace epsalg
