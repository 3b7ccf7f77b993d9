#include "wrl/asymptotics.hpp"

#include <array>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace wrl {

namespace {

using Real = long double;

// B_2, B_4, ..., B_22
constexpr std::array<Real, 11> kBernoulli = {
    1.0L / 6,     -1.0L / 30,       1.0L / 42,         -1.0L / 30,   5.0L / 66,       -691.0L / 2730,
    7.0L / 6,     -3617.0L / 510,   43867.0L / 798,    -174611.0L / 330, 854513.0L / 138};

constexpr Real kRounding = 64 * std::numeric_limits<Real>::epsilon();

Real factorial(int n) {
  Real f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Compensated running sum (Neumaier).
class Accumulator {
 public:
  void add(Real x) {
    const Real t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  Real value() const { return sum_ + carry_; }

 private:
  Real sum_ = 0;
  Real carry_ = 0;
};

/// Euler–Maclaurin correction terms for Σ_{x>=N} f(αx+β) with
/// f(y) = y^{−s}·log y, excluding the integral: f(Y)/2 − Σ_j B_{2j}/(2j)!·α^{2j−1}·f^{(2j−1)}(Y).
/// f^{(k)}(y) = y^{−s−k}(a_k log y + b_k), a_{k+1} = −(s+k)a_k, b_{k+1} = −(s+k)b_k + a_k.
Bounded log_power_corrections(int s, Real alpha, Real beta, std::int64_t n, int order) {
  const Real y = alpha * static_cast<Real>(n) + beta;
  const Real ly = std::log(y);
  Real a = 1, b = 0;
  Real total = std::pow(y, -static_cast<Real>(s)) * ly / 2;
  Real last = 0;
  for (int k = 0; k < 2 * order + 1; ++k) {
    // advance (a, b) from derivative k to k + 1
    const Real na = -(s + k) * a;
    const Real nb = -(s + k) * b + a;
    a = na;
    b = nb;
    const int derivative = k + 1;
    if (derivative % 2 == 0) continue;
    const int j = (derivative + 1) / 2;
    const Real term = kBernoulli[static_cast<std::size_t>(j - 1)] / factorial(2 * j) *
                      std::pow(alpha, static_cast<Real>(derivative)) *
                      std::pow(y, -static_cast<Real>(s + derivative)) * (a * ly + b);
    if (j <= order) {
      total -= term;
    } else {
      last = term;
    }
  }
  return {total, std::fabs(last)};
}

}  // namespace

Bounded euler_gamma() {
  constexpr std::int64_t n = 40;
  Accumulator h;
  for (std::int64_t k = n; k >= 1; --k) h.add(1.0L / static_cast<Real>(k));
  const Real x = static_cast<Real>(n);
  Real value = h.value() - std::log(x) - 1 / (2 * x);
  Real next = 0;
  for (int j = 1; j <= 9; ++j) {
    const Real term = kBernoulli[static_cast<std::size_t>(j - 1)] / (2 * j * std::pow(x, 2.0L * j));
    if (j < 9) {
      value += term;
    } else {
      next = term;
    }
  }
  return {value, std::fabs(next) + kRounding};
}

Bounded zeta_prime_2() {
  constexpr std::int64_t n = 40;
  Accumulator head;
  for (std::int64_t k = n - 1; k >= 2; --k) {
    const Real x = static_cast<Real>(k);
    head.add(std::log(x) / (x * x));
  }
  const Real y = static_cast<Real>(n);
  // ∫_N^∞ log(y)/y² dy = (log N + 1)/N
  const Real integral = (std::log(y) + 1) / y;
  const Bounded corr = log_power_corrections(2, 1, 0, n, 8);
  return {-(head.value() + integral + corr.value), corr.error + kRounding};
}

Bounded l_prime_1_chi4() {
  constexpr std::int64_t n = 40;
  Accumulator head;
  for (std::int64_t k = n - 1; k >= 0; --k) {
    const Real y1 = 4 * static_cast<Real>(k) + 1, y3 = 4 * static_cast<Real>(k) + 3;
    head.add(std::log(y1) / y1 - std::log(y3) / y3);
  }
  // ∫_N^∞ [h(4x+1) − h(4x+3)] dx = (log²(4N+3) − log²(4N+1))/8 for h(y) = log(y)/y.
  const Real l1 = std::log(4 * static_cast<Real>(n) + 1), l3 = std::log(4 * static_cast<Real>(n) + 3);
  const Real integral = (l3 * l3 - l1 * l1) / 8;
  const Bounded c1 = log_power_corrections(1, 4, 1, n, 8);
  const Bounded c3 = log_power_corrections(1, 4, 3, n, 8);
  return {-(head.value() + integral + c1.value - c3.value), c1.error + c3.error + kRounding};
}

ConstantBundle constants() {
  ConstantBundle c;
  c.gamma = euler_gamma();
  c.zeta2 = {kPi * kPi / 6, kRounding};
  c.zeta_prime_2 = zeta_prime_2();
  c.L1_chi4 = {kPi / 4, kRounding};
  c.L1_chi3 = {kPi / (3 * std::sqrt(3.0L)), kRounding};
  c.Lprime1_chi4 = l_prime_1_chi4();
  return c;
}

long double square_main_slope() { return std::log(3.0L) / 3 * (kPi / 4) / (kPi * kPi / 6); }

long double triangle_main_slope() {
  return 9 * std::log(3.0L) / 16 * (kPi / (3 * std::sqrt(3.0L))) / (kPi * kPi / 6);
}

SquareConstantTerms square_constant_terms(std::int64_t terms) {
  if (terms < 10) throw std::invalid_argument("need at least 10 terms");
  const Real log3 = std::log(3.0L);
  SquareConstantTerms out;
  out.terms = terms;

  // p-sum: window (p, Q_p] with Q_p = ⌊p√3⌋ = isqrt(3p²), since 3p² is never a square.
  {
    Accumulator sum;
    Real inner = 0;
    std::int64_t top = 0;  // largest q added so far
    for (std::int64_t p = 1; p <= terms; ++p) {
      if (p <= top) inner -= 1.0L / static_cast<Real>(p);  // q = p leaves the window
      const std::int64_t next = isqrt(3 * p * p);
      for (std::int64_t q = std::max(top, p) + 1; q <= next; ++q) inner += 1.0L / static_cast<Real>(q);
      top = std::max(top, next);
      sum.add((log3 / 2 - inner) / static_cast<Real>(p));
    }
    const Real big = static_cast<Real>(terms);
    out.p_sum = sum.value() + 1 / (2 * big) - 1 / (4 * big * big);
    out.p_tail_bound = (3 + std::log(big)) / (big * big);
  }

  // k-sum over m = 2k+1: odd j with m < j < m√3, i.e. j <= isqrt(3m²).
  {
    Accumulator sum;
    Real inner = 0;
    std::int64_t top = 1;  // largest odd j added so far
    for (std::int64_t k = 0; k <= terms; ++k) {
      const std::int64_t m = 2 * k + 1;
      if (m <= top && k > 0) inner -= 1.0L / static_cast<Real>(m);  // j = m leaves the window
      std::int64_t bound = isqrt(3 * m * m);
      if (bound % 2 == 0) --bound;
      for (std::int64_t j = std::max(top, m) + 2; j <= bound; j += 2) inner += 1.0L / static_cast<Real>(j);
      top = std::max(top, bound);
      sum.add((log3 / 4 - inner) / static_cast<Real>(m));
    }
    const Real big = static_cast<Real>(terms);
    out.k_sum = sum.value() + 1 / (8 * (big + 1));
    out.k_tail_bound = (3 + std::log(big)) / (big * big);
  }
  return out;
}

Bounded c_square_at(std::int64_t terms) {
  const ConstantBundle k = constants();
  const SquareConstantTerms s = square_constant_terms(terms);
  const Real log3 = std::log(3.0L), log2 = std::log(2.0L);
  const Real ratio = k.L1_chi4.value / k.zeta2.value;
  const Real bracket = k.zeta2.value +
                       log3 / 3 *
                           (k.Lprime1_chi4.value / k.L1_chi4.value + k.gamma.value -
                            2 * k.zeta_prime_2.value / k.zeta2.value) +
                       log3 / 3 * (2 * k.gamma.value - log3 / 4 - log2 / 6) - s.p_sum - 4.0L / 3 * s.k_sum;
  const Real input_error = log3 / 3 *
                               (k.Lprime1_chi4.error / k.L1_chi4.value + 3 * k.gamma.error +
                                2 * k.zeta_prime_2.error / k.zeta2.value) +
                           k.zeta2.error;
  // Sliding-window sums drift by about √terms rounding steps.
  const Real rounding = 1e-14L * std::sqrt(static_cast<Real>(terms) / 1e6L);
  const Real error = ratio * (s.p_tail_bound + 4.0L / 3 * s.k_tail_bound + input_error + rounding);
  return {ratio * bracket, error};
}

Bounded compute_c_square(long double target) {
  if (!(target >= 1e-6L)) throw std::invalid_argument("error target must be at least 1e-6");
  for (std::int64_t terms = 1'000'000; terms <= 16'000'000; terms *= 2) {
    const Bounded c = c_square_at(terms);
    if (c.error <= target) return c;
  }
  throw ErrorTargetMissed("c_square: error target not reached within 1.6e7 terms");
}

namespace {

std::vector<long double> prefix_at(const CountTable& counts, const std::vector<std::int64_t>& grid) {
  std::vector<long double> a;
  std::int64_t acc = 0, n = 0;
  for (std::int64_t x : grid) {
    while (n < x) acc += counts[++n];
    a.push_back(static_cast<long double>(acc));
  }
  return a;
}

std::vector<std::int64_t> fit_grid(const CountTable& counts) {
  const std::int64_t n = counts.max_n();
  if (n < 100'000) throw std::invalid_argument("Laurent-constant fit needs counts to N >= 1e5");
  return log_grid(n / 100, n, 400);
}

long double x_log_term(long double x) { return x * (std::log(x) - 1); }

}  // namespace

LaurentFit estimate_laurent_constant(const CountTable& counts, long double main_slope) {
  const auto grid = fit_grid(counts);
  const auto a = prefix_at(counts, grid);
  // Residual per unit x; the least-squares c under weights 1/x² is the mean.
  Eigen::Matrix<long double, Eigen::Dynamic, 1> y(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto x = static_cast<long double>(grid[i]);
    y(static_cast<Eigen::Index>(i)) = (a[i] - main_slope * x_log_term(x)) / x;
  }
  LaurentFit fit;
  fit.points = grid.size();
  fit.constant = y.mean();
  constexpr Eigen::Index windows = 4;
  const Eigen::Index width = y.size() / windows;
  for (Eigen::Index w = 0; w < windows; ++w) {
    const Eigen::Index len = w + 1 == windows ? y.size() - w * width : width;
    fit.spread = std::max(fit.spread, std::fabs(y.segment(w * width, len).mean() - fit.constant));
  }
  return fit;
}

TwoTermFit fit_two_term(const CountTable& counts) {
  const auto grid = fit_grid(counts);
  const auto a = prefix_at(counts, grid);
  const auto rows = static_cast<Eigen::Index>(grid.size());
  Eigen::Matrix<long double, Eigen::Dynamic, 2> design(rows, 2);
  Eigen::Matrix<long double, Eigen::Dynamic, 1> rhs(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto x = static_cast<long double>(grid[static_cast<std::size_t>(i)]);
    design(i, 0) = std::log(x) - 1;
    design(i, 1) = 1;
    rhs(i) = a[static_cast<std::size_t>(i)] / x;
  }
  const Eigen::Matrix<long double, 2, 1> beta = design.colPivHouseholderQr().solve(rhs);
  return {beta(0), beta(1)};
}

AsymptoticModel AsymptoticModel::leading_square() {
  return {Kind::LeadingTerm, std::log(3.0L) / (2 * kPi), 0};
}

AsymptoticModel AsymptoticModel::two_term(long double slope, long double constant) {
  return {Kind::TwoTerm, slope, constant};
}

AsymptoticModel AsymptoticModel::two_reflections(std::int64_t sigma) {
  if (sigma < 1) throw std::invalid_argument("coincidence index must be positive");
  return {Kind::Linear, std::log(3.0L) / (4 * static_cast<long double>(sigma)), 0};
}

long double AsymptoticModel::operator()(long double x) const {
  switch (kind) {
    case Kind::Zero: return 0;
    case Kind::LeadingTerm: return slope * x * std::log(x);
    case Kind::TwoTerm: return slope * x_log_term(x) + constant * x;
    case Kind::Linear: return slope * x;
  }
  return 0;
}

long double AsymptoticModel::error_scale(long double x) const {
  switch (kind) {
    case Kind::Zero: return 1;
    case Kind::Linear: return std::sqrt(x);
    default: return std::pow(x, 0.75L) * std::log(x);
  }
}

SummatoryModel AsymptoticModel::as_summatory(std::string name) const {
  const AsymptoticModel self = *this;
  return {std::move(name), [self](long double x) { return self(x); },
          [self](long double x) { return self.error_scale(x); }};
}

SummatoryReport residual_report(const CountTable& counts, const AsymptoticModel& model,
                                const std::vector<std::int64_t>& grid) {
  return summatory(counts, grid, model.as_summatory("model"));
}

ResidualSummary summarize(const SummatoryReport& report) {
  ResidualSummary s;
  for (std::size_t i = 0; i < report.x.size(); ++i) {
    const long double r = std::fabs(report.normalized_residual[i]);
    s.max_abs_normalized = std::max(s.max_abs_normalized, r);
    std::int64_t decade = 1;
    while (decade * 10 <= report.x[i]) decade *= 10;
    if (s.decade_max.empty() || s.decade_max.back().first != decade) s.decade_max.emplace_back(decade, 0.0L);
    s.decade_max.back().second = std::max(s.decade_max.back().second, r);
  }
  return s;
}

}  // namespace wrl
