#include "wrl/numeric.hpp"

#include <cmath>

namespace wrl {

namespace {

BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw std::invalid_argument("bad integer: " + std::string(text));
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') throw std::invalid_argument("bad integer: " + std::string(text));
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '+' || den_text[0] == '-'))
    throw std::invalid_argument("bad rational: " + std::string(text));
  const BigInt den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (is_integer(r)) return mp::numerator(r).str();
  return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

std::string to_string(const BigInt& z) { return z.str(); }

std::uint64_t isqrt_u(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::domain_error("isqrt of negative value");
  return static_cast<std::int64_t>(isqrt_u(static_cast<std::uint64_t>(n)));
}

long double to_long_double(const Rational& r) {
  const BigInt& num = mp::numerator(r);
  const BigInt& den = mp::denominator(r);
  // Shift both sides into range before dividing.
  const auto nbits = num == 0 ? 0u : mp::msb(mp::abs(num));
  const auto dbits = mp::msb(den);
  const unsigned keep = 60;
  const int nshift = nbits > keep ? static_cast<int>(nbits - keep) : 0;
  const int dshift = dbits > keep ? static_cast<int>(dbits - keep) : 0;
  const BigInt magnitude = mp::abs(num) >> nshift;
  const long double n = (num.sign() < 0 ? -1.0L : 1.0L) * magnitude.convert_to<long double>();
  const long double d = (den >> dshift).convert_to<long double>();
  return std::ldexp(n / d, nshift - dshift);
}

std::int64_t to_int64(const BigInt& z) {
  if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " + z.str());
  return z.convert_to<std::int64_t>();
}

}  // namespace wrl
