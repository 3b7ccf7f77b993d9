#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wrl/sublattice.hpp"

namespace wrl {

/// A floating value with an absolute error bound.
struct Bounded {
  long double value = 0;
  long double error = 0;
};

struct ConstantBundle {
  Bounded gamma;         ///< Euler–Mascheroni
  Bounded zeta2;         ///< π²/6
  Bounded zeta_prime_2;  ///< ζ'(2)
  Bounded L1_chi4;       ///< L(1, χ₋₄) = π/4
  Bounded L1_chi3;       ///< L(1, χ₋₃) = π/(3√3)
  Bounded Lprime1_chi4;  ///< L'(1, χ₋₄)
};

/// Euler–Mascheroni constant from the Euler–Maclaurin expansion of H_N.
Bounded euler_gamma();
/// ζ'(2) = −Σ log(n)/n², head summed to n < 40 and the tail by Euler–Maclaurin.
Bounded zeta_prime_2();
/// L'(1, χ₋₄) = −Σ_k [log(4k+1)/(4k+1) − log(4k+3)/(4k+3)], same scheme.
Bounded l_prime_1_chi4();
ConstantBundle constants();

inline constexpr long double kPi = 3.141592653589793238462643383279502884L;

/// Leading coefficient of A(x) for the square lattice in the x(log x − 1) form,
/// (log 3 / 3)·L(1,χ₋₄)/ζ(2), which equals log 3 / (2π).
long double square_main_slope();
/// (9 log 3 / 16)·L(1,χ₋₃)/ζ(2), which equals 3√3·log 3 / (8π).
long double triangle_main_slope();

/// The two slowly convergent sums of the c□ formula, each summed directly to
/// `terms` and completed by its mean tail:
///   p-sum  Σ_{p>=1} (1/p)(log 3/2 − Σ_{p<q<p√3} 1/q),       tail ≈ 1/(2P) − 1/(4P²)
///   k-sum  Σ_{k>=0} (1/(2k+1))(log 3/4 − Σ 1/(2ℓ+1)),       tail ≈ 1/(8K)
/// The summands are (1/p²)·(mean 1/2 + an equidistributed fluctuation in
/// {p√3}); the fluctuation's partial sums stay O(log P), so by Abel summation
/// the remainder is below (3 + log P)/P² (resp. (3 + log K)/K²).
struct SquareConstantTerms {
  std::int64_t terms = 0;
  long double p_sum = 0;  ///< including tail
  long double k_sum = 0;  ///< including tail
  long double p_tail_bound = 0;
  long double k_tail_bound = 0;
};

SquareConstantTerms square_constant_terms(std::int64_t terms);

/// c□ from its closed formula with `terms` direct summands.
Bounded c_square_at(std::int64_t terms);

struct ErrorTargetMissed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// c□ to absolute accuracy `target` (>= 1e−6); starts at 10⁶ terms and doubles
/// up to 1.6·10⁷.
Bounded compute_c_square(long double target);

struct LaurentFit {
  long double constant = 0;  ///< fitted c in A(x) ≈ slope·x(log x − 1) + c·x
  long double spread = 0;    ///< max deviation of windowed refits
  std::size_t points = 0;
};

/// Least-squares fit of (A(x) − slope·x(log x − 1))/x ≈ c over a
/// logarithmic grid in [N/100, N]; needs N >= 10⁵.
LaurentFit estimate_laurent_constant(const CountTable& counts, long double main_slope);

struct TwoTermFit {
  long double slope = 0;     ///< coefficient of x(log x − 1)
  long double constant = 0;  ///< coefficient of x
};

/// Joint fit of A(x) ≈ slope·x(log x − 1) + c·x on the same grid.
TwoTermFit fit_two_term(const CountTable& counts);

struct AsymptoticModel {
  enum class Kind { Zero, LeadingTerm, TwoTerm, Linear };
  Kind kind = Kind::Zero;
  long double slope = 0;     ///< x log x, x(log x − 1) or x coefficient
  long double constant = 0;  ///< x coefficient for TwoTerm

  /// (log 3 / 2π)·x log x
  static AsymptoticModel leading_square();
  /// slope·x(log x − 1) + c·x
  static AsymptoticModel two_term(long double slope, long double constant);
  /// (log 3 / (4Σ))·x, residual scaled by √x
  static AsymptoticModel two_reflections(std::int64_t sigma);

  long double operator()(long double x) const;
  /// x^{3/4} log x, or √x for the linear law, or 1 for Zero.
  long double error_scale(long double x) const;
  SummatoryModel as_summatory(std::string name) const;
};

struct ResidualSummary {
  long double max_abs_normalized = 0;
  /// Max |normalized residual| per decade [10^k, 10^{k+1}) met by the grid.
  std::vector<std::pair<std::int64_t, long double>> decade_max;
};

SummatoryReport residual_report(const CountTable& counts, const AsymptoticModel& model,
                                const std::vector<std::int64_t>& grid);
ResidualSummary summarize(const SummatoryReport& report);

}  // namespace wrl
