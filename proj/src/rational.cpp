#include "askzeta/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace askzeta {

BigInt big_pow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

Rational rational_pow(const Rational& q, long long k) {
  if (k >= 0) {
    return Rational(boost::multiprecision::pow(numerator(q), static_cast<unsigned>(k)),
                    boost::multiprecision::pow(denominator(q), static_cast<unsigned>(k)));
  }
  if (q == 0) {
    throw std::domain_error("negative power of zero");
  }
  return Rational(1) / rational_pow(q, -k);
}

std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

BigInt parse_integer(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  s = s.substr(b, e - b);
  std::size_t digits_from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == digits_from) {
    throw std::invalid_argument("empty integer literal");
  }
  for (std::size_t i = digits_from; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw std::invalid_argument("invalid integer literal '" + std::string(s) + "'");
    }
  }
  if (s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s));
}

}  // namespace

Rational parse_fraction(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(parse_integer(text.substr(0, slash)), den);
}

}  // namespace askzeta
