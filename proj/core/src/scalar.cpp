#include "epsalg/scalar.hpp"

#include <cctype>

namespace epsalg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
  std::string_view digits = body;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);

  auto slash = digits.find('/');
  std::string_view num = digits.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : digits.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("not an exact rational: \"" + std::string(text) + "\"");
  }
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator: \"" + std::string(text) + "\"");
  mpz_class n(std::string(num), 10);
  if (!body.empty() && body.front() == '-') n = -n;
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

}  // namespace epsalg
