#include "riders/exact.hpp"

#include <cctype>

namespace riders {

BigInt factorial(int k) {
  if (k < 0) throw InvalidArgument("factorial of a negative number");
  BigInt out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

BigInt floor(const Rational& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (q * den != num && num < 0) q -= 1;
  return q;
}

BigInt ceil(const Rational& r) { return -floor(Rational(-r)); }

std::string to_string(const Rational& r) { return r.str(); }
std::string to_string(const BigInt& z) { return z.str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  std::string out(s);
  if (!out.empty() && out[0] == '+') out.erase(0, 1);
  return out;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  std::string s = strip(text);
  if (!is_integer_literal(s))
    throw InvalidArgument("malformed integer '" + std::string(text) + "'");
  return BigInt(s);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0)
    throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace riders
