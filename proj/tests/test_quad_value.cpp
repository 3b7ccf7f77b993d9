#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wrl/quad_value.hpp"

using namespace wrl;

namespace {

QuadValue random_quad(std::mt19937_64& rng, std::int64_t m) {
  auto r = [&](std::int64_t span, std::int64_t den) {
    return Rational(static_cast<std::int64_t>(rng() % (2 * span + 1)) - span,
                    1 + static_cast<std::int64_t>(rng() % den));
  };
  return QuadValue(r(60, 40), r(60, 40), m);
}

}  // namespace

TEST_CASE("rationals parse and print") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("integer helpers") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(15) == 3);
  CHECK(isqrt(16) == 4);
  CHECK(isqrt(999999999999) == 999999);
  CHECK(floor_div<std::int64_t>(-7, 2) == -4);
  CHECK(floor_div<std::int64_t>(7, -2) == -4);
  CHECK(floor_div<std::int64_t>(6, 3) == 2);
  CHECK(to_long_double(Rational(-1, 3)) == doctest::Approx(-1.0 / 3));
  CHECK_THROWS_AS(to_int64(BigInt(1) << 70), std::overflow_error);
}

TEST_CASE("text form round trips") {
  const QuadValue x = parse_quad("1+1*sqrt(2)");
  CHECK(x == QuadValue(1, 1, 2));
  CHECK(parse_quad("1/3*sqrt(2)") == QuadValue(0, Rational(1, 3), 2));
  CHECK(parse_quad("sqrt(5)") == QuadValue(0, 1, 5));
  CHECK(parse_quad("-2/3") == QuadValue(Rational(-2, 3)));
  CHECK(parse_quad("1-1*sqrt(2)") == QuadValue(1, -1, 2));
  CHECK(to_string(QuadValue(1, -1, 2)) == "1-1*sqrt(2)");
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const QuadValue y = random_quad(rng, 3);
    CHECK(parse_quad(to_string(y)) == y);
  }
  CHECK_THROWS(parse_quad("1+"));
  CHECK_THROWS(parse_quad("sqrt(2)", 3));
  CHECK_THROWS(parse_quad("sqrt(8)"));
}

TEST_CASE("radicand 1 and zero irrational part collapse to rationals") {
  CHECK(QuadValue(2, 3, 1) == QuadValue(5));
  CHECK(QuadValue(2, 0, 7).is_rational());
  const QuadValue s2(0, 1, 2);
  CHECK((s2 * s2) == QuadValue(2));
  CHECK((s2 - s2).is_rational());
}

TEST_CASE("mixed radicands are rejected") {
  CHECK_THROWS_AS(QuadValue(0, 1, 2) + QuadValue(0, 1, 3), RadicandMismatch);
  CHECK_NOTHROW(QuadValue(0, 1, 2) + QuadValue(5));
  CHECK_THROWS_AS(QuadValue(1, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(QuadValue(0).inverse(), std::domain_error);
}

TEST_CASE("exact sign agrees with floating evaluation") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (std::int64_t m : {2, 3, 5, 7}) {
    for (int i = 0; i < 2500; ++i) {
      const QuadValue x = random_quad(rng, m);
      const long double f = to_long_double(x.rational_part()) +
                            to_long_double(x.irrational_part()) * std::sqrt(static_cast<long double>(m));
      // |a + b√m| >= 1/(den²·|a − b√m|) keeps these far from rounding noise.
      const int expected = (f > 0) - (f < 0);
      CHECK(sign(x) == expected);
      ++checked;
    }
  }
  CHECK(checked == 10000);
}

TEST_CASE("field identities hold exactly") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const std::int64_t m = std::array<std::int64_t, 3>{2, 3, 6}[i % 3];
    const QuadValue x = random_quad(rng, m), y = random_quad(rng, m), z = random_quad(rng, m);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x - x == QuadValue(0));
    CHECK(QuadValue(x.norm()) == x * x.conjugate());
    if (sign(x) != 0) {
      CHECK(x * x.inverse() == QuadValue(1));
      CHECK((y / x) * x == y);
    }
    CHECK((x < y) == (sign(y - x) > 0));
  }
}

TEST_CASE("floor and rounding") {
  const QuadValue s2(0, 1, 2);
  CHECK(floor(s2) == 1);
  CHECK(floor(-s2) == -2);
  CHECK(floor(QuadValue(1) + s2) == 2);
  CHECK(floor(QuadValue(Rational(7, 2))) == 3);
  CHECK(floor(QuadValue(Rational(-7, 2))) == -4);
  CHECK(floor(QuadValue(4)) == 4);
  CHECK(round_nearest(QuadValue(Rational(5, 2))) == 3);
  CHECK(round_nearest(QuadValue(Rational(-5, 2))) == -2);
  // Huge values where long double alone cannot resolve the fractional part.
  const BigInt big = BigInt(10) * (BigInt(1) << 100);
  const QuadValue near(Rational(big), 1, 2);
  CHECK(floor(near) == big + 1);
  CHECK(floor(QuadValue(Rational(big), -1, 2)) == big - 2);
  // floor(k·√3) against integer square roots.
  for (std::int64_t k = 1; k < 2000; ++k) CHECK(floor(QuadValue(0, k, 3)) == isqrt(3 * k * k));
}

TEST_CASE("square-free test") {
  CHECK(is_square_free(2));
  CHECK(is_square_free(30));
  CHECK_FALSE(is_square_free(12));
  CHECK_FALSE(is_square_free(49));
}
