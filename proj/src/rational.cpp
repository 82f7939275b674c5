#include "lpr/rational.hpp"

#include <cctype>

namespace lpr::field {

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  const bool negative = e < 0;
  unsigned long k = negative ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (negative && sgn(base) == 0) throw DivisionByZero("0 raised to a negative power");
  Rat pos;
  mpz_pow_ui(pos.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(pos.get_den_mpz_t(), base.get_den_mpz_t(), k);
  // base was canonical, so num^k / den^k already is.
  if (!negative) return pos;
  return Rat(1) / pos;
}

static bool valid_integer_token(std::string_view s) {
  if (!s.empty() && s[0] == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rat parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_integer_token(num) || (slash != std::string_view::npos && !valid_integer_token(den)))
    throw ParseError("invalid rational token '" + std::string(text) + "'");
  Rat value(std::string(text), 10);
  if (value.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  value.canonicalize();
  return value;
}

std::string to_string(const Rat& value) {
  return value.get_str();
}

}  // namespace lpr::field
