#include "amitsur/rational.hpp"

#include <cctype>

#include "amitsur/errors.hpp"

namespace amitsur {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer parse_integer(std::string_view text) {
  if (!is_integer_text(text)) throw InvalidInput("malformed integer '" + std::string(text) + "'");
  if (text[0] == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-') throw InvalidInput("negative denominator in '" + std::string(text) + "'");
  return make_rational(num, parse_integer(den_text));
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

}  // namespace amitsur
