#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wrl/numeric.hpp"

namespace wrl {

/// Raised when two QuadValues with different non-trivial radicands meet.
struct RadicandMismatch : std::domain_error {
  using std::domain_error::domain_error;
};

/// Exact element a + b·√m of the real quadratic field Q(√m).
///
/// The radicand m is square-free; m = 0 marks a pure rational. Values whose
/// irrational part vanishes are stored with m = 0, so a pure rational combines
/// freely with any radicand. Two values with distinct radicands >= 2 cannot be
/// combined.
class QuadValue {
 public:
  QuadValue() = default;
  QuadValue(const Rational& a);  // NOLINT(google-explicit-constructor)
  QuadValue(std::int64_t a) : QuadValue(Rational(a)) {}  // NOLINT(google-explicit-constructor)
  QuadValue(const Rational& a, const Rational& b, std::int64_t radicand);

  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }
  std::int64_t radicand() const { return m_; }
  bool is_rational() const { return m_ == 0; }

  QuadValue operator-() const;
  QuadValue& operator+=(const QuadValue& y);
  QuadValue& operator-=(const QuadValue& y);
  QuadValue& operator*=(const QuadValue& y);
  QuadValue& operator/=(const QuadValue& y);

  /// a − b·√m
  QuadValue conjugate() const;
  /// a² − m·b², always rational.
  Rational norm() const;
  QuadValue inverse() const;

  friend QuadValue operator+(QuadValue x, const QuadValue& y) { return x += y; }
  friend QuadValue operator-(QuadValue x, const QuadValue& y) { return x -= y; }
  friend QuadValue operator*(QuadValue x, const QuadValue& y) { return x *= y; }
  friend QuadValue operator/(QuadValue x, const QuadValue& y) { return x /= y; }

  friend bool operator==(const QuadValue& x, const QuadValue& y) {
    return x.m_ == y.m_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator<(const QuadValue& x, const QuadValue& y);
  friend bool operator<=(const QuadValue& x, const QuadValue& y) { return !(y < x); }
  friend bool operator>(const QuadValue& x, const QuadValue& y) { return y < x; }
  friend bool operator>=(const QuadValue& x, const QuadValue& y) { return !(x < y); }

 private:
  void normalize();
  static std::int64_t common_radicand(const QuadValue& x, const QuadValue& y);

  Rational a_{0};
  Rational b_{0};
  std::int64_t m_ = 0;
};

/// Exact sign of a + b·√m: case split on the signs of a and b, then a² vs m·b².
int sign(const QuadValue& x);
QuadValue abs(const QuadValue& x);
/// Largest integer k with k <= x.
BigInt floor(const QuadValue& x);
/// floor(x + 1/2)
BigInt round_nearest(const QuadValue& x);
long double to_long_double(const QuadValue& x);

bool is_square_free(std::int64_t m);

/// Text form "a", "a+b*sqrt(m)", "b*sqrt(m)", "sqrt(m)" with rationals "p/q".
/// When `radicand` is given, every √ in the text must use it.
QuadValue parse_quad(std::string_view text, std::optional<std::int64_t> radicand = std::nullopt);
std::string to_string(const QuadValue& x);

}  // namespace wrl
