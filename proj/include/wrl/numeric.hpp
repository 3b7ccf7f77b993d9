#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace wrl {

namespace mp = boost::multiprecision;

/// Arbitrary-precision integer and rational carriers. Expression templates
/// are off so that `auto` always yields a value.
using BigInt = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::cpp_rational_backend, mp::et_off>;

using int128 = __int128;

inline BigInt numerator_of(const Rational& r) { return mp::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return mp::denominator(r); }

inline bool is_integer(const Rational& r) { return mp::denominator(r) == 1; }

/// Parses "p" or "p/q" (optional sign, no spaces).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

/// floor(sqrt(n)) for n >= 0.
std::int64_t isqrt(std::int64_t n);
std::uint64_t isqrt_u(std::uint64_t n);

inline int sign_of(const Rational& r) { return r.sign(); }
inline int sign_of(const BigInt& z) { return z.sign(); }

template <typename T>
  requires std::is_integral_v<T> || std::is_same_v<T, int128>
constexpr int sign_of(T v) {
  return (v > 0) - (v < 0);
}

/// floor(num/den) for integers, den != 0.
template <typename T>
constexpr T floor_div(T num, T den) {
  T q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

long double to_long_double(const Rational& r);

/// Narrowing with overflow check.
std::int64_t to_int64(const BigInt& z);

}  // namespace wrl
