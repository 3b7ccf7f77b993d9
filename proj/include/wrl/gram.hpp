#pragma once

#include <cstdint>
#include <utility>

#include "wrl/numeric.hpp"
#include "wrl/quad_value.hpp"

namespace wrl {

/// 2×2 matrix whose rows are vectors (rows-as-basis convention).
template <typename T>
struct Mat2 {
  T m11{1}, m12{0}, m21{0}, m22{1};

  static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }
  T det() const { return m11 * m22 - m12 * m21; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.m11 * y.m11 + x.m12 * y.m21, x.m11 * y.m12 + x.m12 * y.m22,
            x.m21 * y.m11 + x.m22 * y.m21, x.m21 * y.m12 + x.m22 * y.m22};
  }
};

/// Symmetric 2×2 Gram matrix [[g11, g12], [g12, g22]] over an ordered field or ring.
template <typename Scalar>
struct Gram2 {
  Scalar g11{1}, g12{0}, g22{1};

  Scalar det() const { return g11 * g22 - g12 * g12; }
  friend bool operator==(const Gram2&, const Gram2&) = default;
};

// Per-scalar hooks used by the reduction template.
inline int form_sign(std::int64_t x) { return sign_of(x); }
inline int form_sign(int128 x) { return sign_of(x); }
inline int form_sign(const QuadValue& x) { return sign(x); }

/// Integer type of the multipliers a reduction step subtracts.
template <typename Scalar>
struct StepType {
  using type = Scalar;
};
template <>
struct StepType<QuadValue> {
  using type = BigInt;
};

/// Nearest integer to num/den, halves rounded up; den > 0.
template <typename T>
  requires std::is_integral_v<T> || std::is_same_v<T, int128>
T nearest_quotient(T num, T den) {
  return floor_div<T>(2 * num + den, 2 * den);
}
inline BigInt nearest_quotient(const QuadValue& num, const QuadValue& den) {
  return round_nearest(num / den);
}

template <typename Scalar>
Scalar from_step(const typename StepType<Scalar>::type& k) {
  if constexpr (std::is_same_v<Scalar, QuadValue>) {
    return QuadValue(Rational(k));
  } else {
    return k;
  }
}

/// H·G·Hᵀ for an integer row matrix H.
template <typename Scalar, typename Int>
Gram2<Scalar> transform_gram(const Gram2<Scalar>& g, const Mat2<Int>& h) {
  const Scalar a = from_step<Scalar>(h.m11), b = from_step<Scalar>(h.m12);
  const Scalar c = from_step<Scalar>(h.m21), d = from_step<Scalar>(h.m22);
  const Scalar two(2);
  return {a * a * g.g11 + two * a * b * g.g12 + b * b * g.g22,
          a * c * g.g11 + (a * d + b * c) * g.g12 + b * d * g.g22,
          c * c * g.g11 + two * c * d * g.g12 + d * d * g.g22};
}

/// Gauss–Lagrange reduction of a positive definite form.
///
/// On return g11 <= g22 and 0 <= 2·g12 <= g11. When `transform` is non-null it
/// receives the unimodular U with reduced = U·G·Uᵀ.
template <typename Scalar>
Gram2<Scalar> reduce_form(Gram2<Scalar> g, Mat2<typename StepType<Scalar>::type>* transform = nullptr) {
  using Step = typename StepType<Scalar>::type;
  Mat2<Step> u = Mat2<Step>::identity();
  const Scalar two(2);
  for (;;) {
    if (form_sign(g.g11 - g.g22) > 0) {
      std::swap(g.g11, g.g22);
      std::swap(u.m11, u.m21);
      std::swap(u.m12, u.m22);
    }
    const Scalar twice = two * g.g12;
    if (form_sign(twice - g.g11) <= 0 && form_sign(twice + g.g11) >= 0) break;
    const Step k = nearest_quotient(g.g12, g.g11);
    const Scalar ks = from_step<Scalar>(k);
    g.g22 = g.g22 - two * ks * g.g12 + ks * ks * g.g11;
    g.g12 = g.g12 - ks * g.g11;
    u.m21 = u.m21 - k * u.m11;
    u.m22 = u.m22 - k * u.m12;
  }
  if (form_sign(g.g12) < 0) {
    g.g12 = -g.g12;
    u.m21 = -u.m21;
    u.m22 = -u.m22;
  }
  if (transform) *transform = u;
  return g;
}

enum class ShapeClass { Square, Hexagonal, RhombicWR, RhombicNonWR, Rectangular, Oblique };

const char* to_string(ShapeClass shape);

/// Shape of a form already in the canonical reduced range.
template <typename Scalar>
ShapeClass classify_reduced(const Gram2<Scalar>& r) {
  const bool equal_minima = form_sign(r.g11 - r.g22) == 0;
  const bool orthogonal = form_sign(r.g12) == 0;
  const bool half = form_sign(Scalar(2) * r.g12 - r.g11) == 0;
  if (equal_minima) {
    if (orthogonal) return ShapeClass::Square;
    if (half) return ShapeClass::Hexagonal;
    return ShapeClass::RhombicWR;
  }
  if (orthogonal) return ShapeClass::Rectangular;
  if (half) return ShapeClass::RhombicNonWR;
  return ShapeClass::Oblique;
}

inline bool is_wr_shape(ShapeClass s) {
  return s == ShapeClass::Square || s == ShapeClass::Hexagonal || s == ShapeClass::RhombicWR;
}

}  // namespace wrl
