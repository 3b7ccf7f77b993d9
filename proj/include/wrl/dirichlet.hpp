#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wrl/numeric.hpp"

namespace wrl {

/// Truncated Dirichlet series Σ_{n<=N} c(n)·n^{−s}.
///
/// Every operation below is exact for all n <= N provided its inputs are
/// exact to N; nothing beyond N is ever needed because divisors of n are <= n.
struct CoeffSeries {
  std::string tag;
  std::vector<BigInt> coeffs;  ///< coeffs[0] unused

  CoeffSeries() = default;
  CoeffSeries(std::string tag_, std::int64_t length)
      : tag(std::move(tag_)), coeffs(static_cast<std::size_t>(length) + 1, BigInt(0)) {}

  std::int64_t length() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }
  const BigInt& operator[](std::int64_t n) const { return coeffs.at(static_cast<std::size_t>(n)); }
  BigInt& operator[](std::int64_t n) { return coeffs.at(static_cast<std::size_t>(n)); }

  /// The multiplicative identity (1, 0, 0, ...).
  static CoeffSeries identity(std::int64_t length);
};

/// (a ⊛ b)(n) = Σ_{d|n} a(d)·b(n/d)
CoeffSeries convolve(const CoeffSeries& a, const CoeffSeries& b);
/// Dirichlet inverse; needs a(1) = ±1.
CoeffSeries invert_unit(const CoeffSeries& a);
CoeffSeries add(const CoeffSeries& a, const CoeffSeries& b);
CoeffSeries scale(const CoeffSeries& a, const BigInt& factor);
/// Multiplication by k^{−s}: c(m) moves to index k·m.
CoeffSeries shift(const CoeffSeries& a, std::int64_t k);
/// 1 + k^{−s}
CoeffSeries one_plus_power(std::int64_t k, std::int64_t length);

enum class StandardSeries { Zeta, Zeta2s, LChiMinus4, LChiMinus3, DedekindGauss, DedekindEisenstein };

int chi_minus4(std::int64_t n);
int chi_minus3(std::int64_t n);

CoeffSeries standard_series(StandardSeries kind, std::int64_t length);

enum class LatticeFamily { Square, Triangle };

/// Primitive similar sublattices: the Dedekind series divided by ζ(2s).
CoeffSeries primitive_similar(LatticeFamily family, std::int64_t length);

enum class Window { SqEven, SqOdd, TriEven, TriOdd };

// Pair-window predicates, all in integer arithmetic. The bounds against √3
// are strict squares comparisons; √3 is irrational, so no boundary case can
// tie. Index sets start at p = 1, k = 1 (k = 0 contributes nothing anyway).

/// p < q, q² < 3p²
bool in_square_even_window(std::int64_t p, std::int64_t q);
/// k < ℓ, (2ℓ+1)² < 3(2k+1)², equivalent to ℓ < √3·k + (√3−1)/2
bool in_square_odd_window(std::int64_t k, std::int64_t l);
/// p < q < 3p
bool in_triangle_even_window(std::int64_t p, std::int64_t q);
/// k < ℓ <= 3k, equivalent to ℓ < 3k + 1
bool in_triangle_odd_window(std::int64_t k, std::int64_t l);

/// c(u) = number of window pairs whose product (p·q, or (2k+1)(2ℓ+1)) is u.
CoeffSeries window_series(Window kind, std::int64_t length);

/// Well-rounded sublattices of the square lattice by index:
/// Dedekind(Q(i)) + 2·2^{−s}·pr ⊛ W_even + 2·(1+2^{−s})^{−1}·pr ⊛ W_odd.
CoeffSeries wr_series_square(std::int64_t length);
/// Well-rounded sublattices of the triangular lattice by index:
/// Dedekind(Q(ρ)) + 3·4^{−s}(1+3^{−s})^{−1}·pr ⊛ W_even + 3·(1+3^{−s})^{−1}·pr ⊛ W_odd.
CoeffSeries wr_series_triangle(std::int64_t length);

}  // namespace wrl
