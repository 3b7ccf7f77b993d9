#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "wrl/numeric.hpp"

namespace wrl {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

inline constexpr int kMaxDimension = 8;

/// Orthogonal basis b_1..b_d given by the squared lengths |b_i|².
struct OrthoSpec {
  std::vector<Rational> lengths_sq;

  int dimension() const { return static_cast<int>(lengths_sq.size()); }
};

/// Lattice spanned by the rows of `basis`, written in b-coordinates.
///
/// The Gram matrix B·diag(|b_i|²)·Bᵀ is kept integral as `scaled_gram`
/// together with its common denominator.
class LatticeD {
 public:
  LatticeD(IntMatrix basis, const OrthoSpec& spec);

  int dimension() const { return static_cast<int>(basis_.rows()); }
  const IntMatrix& basis() const { return basis_; }
  const IntMatrix& scaled_gram() const { return scaled_gram_; }
  const BigInt& gram_denominator() const { return denominator_; }
  Rational gram(int i, int j) const;
  const OrthoSpec& spec() const { return spec_; }

  /// Squared length of an integer vector given in b-coordinates.
  Rational norm(const IntVector& v) const;
  /// Whether v (b-coordinates) is an integer combination of the basis rows.
  bool contains(const IntVector& v) const;

 private:
  IntMatrix basis_;
  OrthoSpec spec_;
  std::vector<std::int64_t> scaled_lengths_;
  BigInt denominator_;
  IntMatrix scaled_gram_;
};

/// Row-style Hermite basis of the lattice spanned by `generators` (rows).
IntMatrix hermite_basis(const IntMatrix& generators);

/// All 2^d sign vectors (rows), in binary order.
IntMatrix sign_vectors(int d);
/// Sign vectors whose coordinate sum is divisible by d.
IntMatrix balanced_sign_vectors(int d);

/// Span of all sign vectors Σ s_i·b_i.
LatticeD fullsign_lattice(const OrthoSpec& spec);
/// Span of the sign vectors with Σ s_i ≡ 0 (mod d); d must be even.
LatticeD subset_sign_lattice(const OrthoSpec& spec);

struct ShortestVectors {
  Rational min_norm;
  std::vector<IntVector> vectors;  ///< b-coordinates, closed under negation
};

/// Exhaustive enumeration of all minimal nonzero vectors.
///
/// The basis is first size-reduced pairwise until no diagonal entry shrinks; the
/// smallest diagonal entry then bounds the search radius. Pruning runs on a
/// floating LDLᵀ with slack; every candidate norm is evaluated exactly.
ShortestVectors shortest_vectors(const LatticeD& lattice);

bool is_well_rounded_d(const LatticeD& lattice);

/// Rank over Q of a set of integer vectors.
int rank_of(const std::vector<IntVector>& vectors);
/// Exact determinant of a square integer matrix.
BigInt determinant(const IntMatrix& m);

}  // namespace wrl
