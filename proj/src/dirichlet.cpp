#include "wrl/dirichlet.hpp"

#include <stdexcept>

namespace wrl {

namespace {

void require_same_length(const CoeffSeries& a, const CoeffSeries& b) {
  if (a.length() != b.length())
    throw std::invalid_argument("series length mismatch: " + std::to_string(a.length()) + " vs " +
                                std::to_string(b.length()));
}

void require_length(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("series length must be positive");
}

}  // namespace

CoeffSeries CoeffSeries::identity(std::int64_t length) {
  require_length(length);
  CoeffSeries e("identity", length);
  e[1] = 1;
  return e;
}

CoeffSeries convolve(const CoeffSeries& a, const CoeffSeries& b) {
  require_same_length(a, b);
  const std::int64_t n = a.length();
  CoeffSeries c("(" + a.tag + ")*(" + b.tag + ")", n);
  for (std::int64_t i = 1; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::int64_t j = 1; i * j <= n; ++j)
      if (b[j] != 0) c[i * j] += a[i] * b[j];
  }
  return c;
}

CoeffSeries invert_unit(const CoeffSeries& a) {
  const std::int64_t n = a.length();
  require_length(n);
  if (a[1] != 1 && a[1] != -1) throw std::domain_error("leading coefficient is not a unit");
  const BigInt lead = a[1];
  // Solve (a ⊛ b)(m) = [m = 1] upward; contributions of b(m) are pushed to its multiples.
  CoeffSeries b("inv(" + a.tag + ")", n);
  CoeffSeries acc("acc", n);  // acc(m) = Σ_{d|m, d<m} b(d)·a(m/d)
  for (std::int64_t m = 1; m <= n; ++m) {
    const BigInt target = m == 1 ? BigInt(1) : BigInt(0);
    b[m] = (target - acc[m]) * lead;  // lead⁻¹ = lead
    if (b[m] == 0) continue;
    for (std::int64_t k = 2; k * m <= n; ++k)
      if (a[k] != 0) acc[k * m] += b[m] * a[k];
  }
  return b;
}

CoeffSeries add(const CoeffSeries& a, const CoeffSeries& b) {
  require_same_length(a, b);
  CoeffSeries c(a.tag + "+" + b.tag, a.length());
  for (std::int64_t i = 1; i <= a.length(); ++i) c[i] = a[i] + b[i];
  return c;
}

CoeffSeries scale(const CoeffSeries& a, const BigInt& factor) {
  CoeffSeries c(factor.str() + "*" + a.tag, a.length());
  for (std::int64_t i = 1; i <= a.length(); ++i) c[i] = a[i] * factor;
  return c;
}

CoeffSeries shift(const CoeffSeries& a, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("shift factor must be positive");
  CoeffSeries c(std::to_string(k) + "^-s*" + a.tag, a.length());
  for (std::int64_t i = 1; i * k <= a.length(); ++i) c[i * k] = a[i];
  return c;
}

CoeffSeries one_plus_power(std::int64_t k, std::int64_t length) {
  CoeffSeries c("1+" + std::to_string(k) + "^-s", length);
  c[1] = 1;
  if (k <= length) c[k] += 1;
  return c;
}

int chi_minus4(std::int64_t n) {
  switch (((n % 4) + 4) % 4) {
    case 1: return 1;
    case 3: return -1;
    default: return 0;
  }
}

int chi_minus3(std::int64_t n) {
  switch (((n % 3) + 3) % 3) {
    case 1: return 1;
    case 2: return -1;
    default: return 0;
  }
}

CoeffSeries standard_series(StandardSeries kind, std::int64_t length) {
  require_length(length);
  switch (kind) {
    case StandardSeries::Zeta: {
      CoeffSeries c("zeta", length);
      for (std::int64_t n = 1; n <= length; ++n) c[n] = 1;
      return c;
    }
    case StandardSeries::Zeta2s: {
      CoeffSeries c("zeta(2s)", length);
      for (std::int64_t r = 1; r * r <= length; ++r) c[r * r] = 1;
      return c;
    }
    case StandardSeries::LChiMinus4:
    case StandardSeries::LChiMinus3: {
      const bool four = kind == StandardSeries::LChiMinus4;
      CoeffSeries c(four ? "L(chi_-4)" : "L(chi_-3)", length);
      for (std::int64_t n = 1; n <= length; ++n) c[n] = four ? chi_minus4(n) : chi_minus3(n);
      return c;
    }
    case StandardSeries::DedekindGauss:
    case StandardSeries::DedekindEisenstein: {
      // Σ_{d|n} χ(d), sieved over d.
      const bool four = kind == StandardSeries::DedekindGauss;
      CoeffSeries c(four ? "zeta_Q(i)" : "zeta_Q(rho)", length);
      for (std::int64_t d = 1; d <= length; ++d) {
        const int chi = four ? chi_minus4(d) : chi_minus3(d);
        if (chi == 0) continue;
        for (std::int64_t n = d; n <= length; n += d) c[n] += chi;
      }
      return c;
    }
  }
  throw std::invalid_argument("unknown series kind");
}

CoeffSeries primitive_similar(LatticeFamily family, std::int64_t length) {
  const auto dedekind = standard_series(
      family == LatticeFamily::Square ? StandardSeries::DedekindGauss : StandardSeries::DedekindEisenstein, length);
  CoeffSeries pr = convolve(dedekind, invert_unit(standard_series(StandardSeries::Zeta2s, length)));
  pr.tag = family == LatticeFamily::Square ? "pr_square" : "pr_triangle";
  return pr;
}

bool in_square_even_window(std::int64_t p, std::int64_t q) { return p >= 1 && p < q && q * q < 3 * p * p; }

bool in_square_odd_window(std::int64_t k, std::int64_t l) {
  return k >= 1 && k < l && (2 * l + 1) * (2 * l + 1) < 3 * (2 * k + 1) * (2 * k + 1);
}

bool in_triangle_even_window(std::int64_t p, std::int64_t q) { return p >= 1 && p < q && q < 3 * p; }

bool in_triangle_odd_window(std::int64_t k, std::int64_t l) { return k >= 1 && k < l && l <= 3 * k; }

CoeffSeries window_series(Window kind, std::int64_t length) {
  require_length(length);
  static const char* names[] = {"window:sq_even", "window:sq_odd", "window:tri_even", "window:tri_odd"};
  CoeffSeries c(names[static_cast<int>(kind)], length);
  const bool odd = kind == Window::SqOdd || kind == Window::TriOdd;
  if (!odd) {
    for (std::int64_t p = 1; p * (p + 1) <= length; ++p)
      for (std::int64_t q = p + 1; p * q <= length; ++q) {
        const bool in = kind == Window::SqEven ? in_square_even_window(p, q) : in_triangle_even_window(p, q);
        if (in) c[p * q] += 1;
      }
    return c;
  }
  for (std::int64_t k = 1; (2 * k + 1) * (2 * k + 3) <= length; ++k)
    for (std::int64_t l = k + 1; (2 * k + 1) * (2 * l + 1) <= length; ++l) {
      const bool in = kind == Window::SqOdd ? in_square_odd_window(k, l) : in_triangle_odd_window(k, l);
      if (in) c[(2 * k + 1) * (2 * l + 1)] += 1;
    }
  return c;
}

CoeffSeries wr_series_square(std::int64_t length) {
  require_length(length);
  const CoeffSeries pr = primitive_similar(LatticeFamily::Square, length);
  const CoeffSeries even = shift(convolve(pr, window_series(Window::SqEven, length)), 2);
  const CoeffSeries odd =
      convolve(convolve(invert_unit(one_plus_power(2, length)), pr), window_series(Window::SqOdd, length));
  CoeffSeries total = add(standard_series(StandardSeries::DedekindGauss, length),
                          add(scale(even, 2), scale(odd, 2)));
  total.tag = "square-wr";
  return total;
}

CoeffSeries wr_series_triangle(std::int64_t length) {
  require_length(length);
  const CoeffSeries pr = primitive_similar(LatticeFamily::Triangle, length);
  const CoeffSeries damped = convolve(invert_unit(one_plus_power(3, length)), pr);
  const CoeffSeries even = shift(convolve(damped, window_series(Window::TriEven, length)), 4);
  const CoeffSeries odd = convolve(damped, window_series(Window::TriOdd, length));
  CoeffSeries total = add(standard_series(StandardSeries::DedekindEisenstein, length),
                          add(scale(even, 3), scale(odd, 3)));
  total.tag = "triangle-wr";
  return total;
}

}  // namespace wrl
