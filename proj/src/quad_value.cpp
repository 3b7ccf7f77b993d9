#include "wrl/quad_value.hpp"

#include <cctype>
#include <cmath>

namespace wrl {

bool is_square_free(std::int64_t m) {
  if (m < 0) return false;
  if (m < 2) return true;
  for (std::int64_t p = 2; p * p <= m; ++p)
    if (m % (p * p) == 0) return false;
  return true;
}

QuadValue::QuadValue(const Rational& a) : a_(a) {}

QuadValue::QuadValue(const Rational& a, const Rational& b, std::int64_t radicand)
    : a_(a), b_(b), m_(radicand) {
  if (!is_square_free(radicand))
    throw std::invalid_argument("radicand must be a non-negative square-free integer, got " +
                                std::to_string(radicand));
  normalize();
}

void QuadValue::normalize() {
  if (m_ == 1) a_ += b_;
  if (m_ <= 1 || b_ == 0) {
    b_ = 0;
    m_ = 0;
  }
}

std::int64_t QuadValue::common_radicand(const QuadValue& x, const QuadValue& y) {
  if (x.m_ == 0) return y.m_;
  if (y.m_ == 0 || y.m_ == x.m_) return x.m_;
  throw RadicandMismatch("mixed radicands " + std::to_string(x.m_) + " and " + std::to_string(y.m_));
}

QuadValue QuadValue::operator-() const {
  QuadValue r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadValue& QuadValue::operator+=(const QuadValue& y) {
  m_ = common_radicand(*this, y);
  a_ += y.a_;
  b_ += y.b_;
  normalize();
  return *this;
}

QuadValue& QuadValue::operator-=(const QuadValue& y) {
  m_ = common_radicand(*this, y);
  a_ -= y.a_;
  b_ -= y.b_;
  normalize();
  return *this;
}

QuadValue& QuadValue::operator*=(const QuadValue& y) {
  const std::int64_t m = common_radicand(*this, y);
  const Rational a = a_ * y.a_ + b_ * y.b_ * m;
  const Rational b = a_ * y.b_ + b_ * y.a_;
  a_ = a;
  b_ = b;
  m_ = m;
  normalize();
  return *this;
}

QuadValue& QuadValue::operator/=(const QuadValue& y) { return *this *= y.inverse(); }

QuadValue QuadValue::conjugate() const {
  QuadValue r = *this;
  r.b_ = -r.b_;
  return r;
}

Rational QuadValue::norm() const { return a_ * a_ - b_ * b_ * m_; }

QuadValue QuadValue::inverse() const {
  const Rational n = norm();
  if (n == 0) throw std::domain_error("inverse of zero");
  QuadValue r = conjugate();
  r.a_ /= n;
  r.b_ /= n;
  r.normalize();
  return r;
}

bool operator<(const QuadValue& x, const QuadValue& y) { return sign(x - y) < 0; }

int sign(const QuadValue& x) {
  const int sa = x.rational_part().sign();
  const int sb = x.irrational_part().sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a² with m·b².
  const Rational a2 = x.rational_part() * x.rational_part();
  const Rational mb2 = x.irrational_part() * x.irrational_part() * x.radicand();
  const int cmp = a2 > mb2 ? 1 : (a2 < mb2 ? -1 : 0);
  return sa > 0 ? cmp : -cmp;
}

QuadValue abs(const QuadValue& x) { return sign(x) < 0 ? -x : x; }

long double to_long_double(const QuadValue& x) {
  return to_long_double(x.rational_part()) +
         to_long_double(x.irrational_part()) * std::sqrt(static_cast<long double>(x.radicand()));
}

BigInt floor(const QuadValue& x) {
  if (x.is_rational()) {
    const Rational& r = x.rational_part();
    BigInt q = numerator_of(r) / denominator_of(r);
    if (q * denominator_of(r) > numerator_of(r)) --q;
    return q;
  }
  // Floating guess, corrected exactly below.
  BigInt k(std::floor(to_long_double(x)));
  while (sign(x - QuadValue(Rational(k))) < 0) --k;
  while (sign(x - QuadValue(Rational(k + 1))) >= 0) ++k;
  return k;
}

BigInt round_nearest(const QuadValue& x) { return floor(x + QuadValue(Rational(1, 2))); }

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  bool accept(std::string_view token) {
    if (text.substr(pos, token.size()) == token) {
      pos += token.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse \"" + std::string(text) + "\": " + what);
  }
  std::string_view take_rational() {
    const std::size_t start = pos;
    while (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos;
    return text.substr(start, pos - start);
  }
};

// term := [rational "*"] "sqrt(" int ")" | rational
// Returns (coefficient, radicand or 0).
std::pair<Rational, std::int64_t> parse_term(Cursor& c) {
  Rational coeff(1);
  bool have_number = false;
  const std::string_view digits = c.take_rational();
  if (!digits.empty()) {
    coeff = parse_rational(digits);
    have_number = true;
    if (!c.accept("*")) return {coeff, 0};
  }
  if (!c.accept("sqrt(")) {
    if (!have_number) c.fail("expected a number or sqrt(m)");
    c.fail("expected sqrt( after *");
  }
  const std::string_view inner = c.take_rational();
  if (inner.empty() || inner.find('/') != std::string_view::npos) c.fail("radicand must be an integer");
  if (!c.accept(")")) c.fail("missing )");
  const auto m = static_cast<std::int64_t>(std::stoll(std::string(inner)));
  if (!is_square_free(m) || m < 2) c.fail("radicand must be square-free and >= 2");
  return {coeff, m};
}

}  // namespace

QuadValue parse_quad(std::string_view text, std::optional<std::int64_t> radicand) {
  Cursor c{text};
  Rational a(0), b(0);
  std::int64_t m = 0;
  bool first = true;
  while (!c.done()) {
    int s = 1;
    if (c.accept("+")) {
    } else if (c.accept("-")) {
      s = -1;
    } else if (!first) {
      c.fail("expected + or -");
    }
    first = false;
    auto [coeff, r] = parse_term(c);
    if (r == 0) {
      a += s * coeff;
    } else {
      if (m != 0 && r != m) c.fail("mixed radicands");
      m = r;
      b += s * coeff;
    }
  }
  if (first) c.fail("empty value");
  if (m != 0 && radicand && *radicand != m)
    throw RadicandMismatch("entry \"" + std::string(text) + "\" uses sqrt(" + std::to_string(m) +
                           ") but --radicand is " + std::to_string(*radicand));
  return QuadValue(a, b, m);
}

std::string to_string(const QuadValue& x) {
  if (x.is_rational()) return to_string(x.rational_part());
  std::string out;
  if (x.rational_part() != 0) out = to_string(x.rational_part());
  const Rational& b = x.irrational_part();
  if (b.sign() < 0) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  out += to_string(Rational(mp::abs(b))) + "*sqrt(" + std::to_string(x.radicand()) + ")";
  return out;
}

}  // namespace wrl
