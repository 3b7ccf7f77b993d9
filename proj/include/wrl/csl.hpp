#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "wrl/lattice.hpp"
#include "wrl/sublattice.hpp"

namespace wrl {

/// Linear map on lattice coordinates (column vectors).
using RationalMatrix2 = Mat2<Rational>;
using Axis = std::array<std::int64_t, 2>;

struct ReflectionWitness {
  Axis axis{};  ///< primitive, first nonzero coordinate positive
  RationalMatrix2 matrix;
  BigInt sigma;
};

/// Reflection fixing the line through the lattice vector v, in lattice
/// coordinates: S = 2·v·vᵀ·G / (vᵀ·G·v) − I. Empty when some entry is
/// irrational, i.e. the reflection is not a coincidence reflection.
std::optional<RationalMatrix2> reflection_matrix(const PlanarLattice& lattice, const Axis& v);

/// Coincidence index of a rational involution S: the index of
/// {x ∈ Z² : S·x ∈ Z²} in Z², from the Smith invariants of q·S with q the
/// common denominator (Σ = q² / Π gcd(d_i, q)).
BigInt csl_index(const RationalMatrix2& s);

struct ReflectionScan {
  std::vector<ReflectionWitness> reflections;
  /// Gram matrix is rational up to a scalar: every lattice-vector reflection
  /// is then a coincidence reflection and `reflections` is only a sample.
  bool all_rational = false;
};

/// Scans primitive axes with coordinates in [−bound, bound], ordered by
/// (|v|∞, lexicographic).
ReflectionScan coincidence_reflections(const PlanarLattice& lattice, std::int64_t axis_bound);

std::int64_t gcd_abs(std::int64_t a, std::int64_t b);
Axis primitive_axis(const BigInt& x, const BigInt& y);

enum class Verdict {
  Consistent,    ///< both found, or neither found up to the bounds
  Inconclusive,  ///< exactly one side found up to the bounds
  Violation,     ///< a WR sublattice whose mirror axes give no rational reflection
};

const char* to_string(Verdict v);

struct HarnessReport {
  Verdict verdict = Verdict::Consistent;
  ReflectionScan scan;
  std::optional<SublatticeWitness> wr_witness;
  /// Reflection across u+v or u−v for the witness's equal-length basis u, v.
  std::optional<ReflectionWitness> witness_mirror;
};

/// Cross-checks "WR sublattice exists ⇔ coincidence reflection exists" up to
/// the given bounds. Absence on both sides is evidence, not proof.
HarnessReport theorem1_harness(const PlanarLattice& lattice, std::int64_t axis_bound, std::int64_t index_bound);

}  // namespace wrl
