#include "kummer/rational.hpp"

#include <cctype>

#include "kummer/error.hpp"

namespace kummer {

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  return Integer(std::string(s));
}

} // namespace

Rational parse_rational(std::string_view token) {
  auto slash = token.find('/');
  auto num = token.substr(0, slash);
  if (!is_integer_token(num))
    throw InputError("malformed rational '" + std::string(token) + "'");
  if (slash == std::string_view::npos)
    return Rational(to_integer(num));
  auto den = token.substr(slash + 1);
  if (!is_integer_token(den) || den.front() == '-' || den.front() == '+')
    throw InputError("malformed rational '" + std::string(token) + "'");
  auto d = to_integer(den);
  if (d == 0)
    throw InputError("zero denominator in '" + std::string(token) + "'");
  return Rational(to_integer(num), d);
}

std::string to_string(const Rational& q) { return q.str(); }

} // namespace kummer
