#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "wrl/gram.hpp"
#include "wrl/quad_value.hpp"

namespace wrl {

using GramMatrix2 = Gram2<QuadValue>;
using IntMatrix2 = Mat2<BigInt>;

struct NotPositiveDefinite : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A planar lattice up to isometry, given by the Gram matrix of one basis.
struct PlanarLattice {
  GramMatrix2 gram;
  std::string label;

  /// Validates positive definiteness and a single shared radicand.
  static PlanarLattice from_gram(const GramMatrix2& gram, std::string label = {});
  static PlanarLattice square();
  static PlanarLattice triangle();

  /// Radicand shared by the entries (0 when all are rational).
  std::int64_t radicand() const;
};

/// Parses "g11,g12,g22" with QuadValue syntax per entry.
GramMatrix2 parse_gram(std::string_view text, std::optional<std::int64_t> radicand = std::nullopt);
std::string to_string(const GramMatrix2& g);

struct Reduction {
  IntMatrix2 transform;  ///< unimodular, reduced = U·G·Uᵀ
  GramMatrix2 reduced;
};

Reduction lagrange_reduce(const GramMatrix2& gram);

struct Minima {
  QuadValue lambda1_sq;
  QuadValue lambda2_sq;
};

Minima minima(const PlanarLattice& lattice);
bool is_well_rounded(const PlanarLattice& lattice);
ShapeClass classify(const PlanarLattice& lattice);

/// Gram matrix of the sublattice spanned by the rows of h (lattice coordinates).
GramMatrix2 sublattice_gram(const PlanarLattice& lattice, const IntMatrix2& h);

/// If every entry is a rational multiple of one common QuadValue, the integral
/// form proportional to the Gram matrix (primitive, positive definite).
std::optional<Gram2<int128>> integral_form(const GramMatrix2& gram);

/// Positive definite rational Gram with numerators in [−6, 6] and denominators
/// in {1, 2, 3}. Draws use plain modular reduction so a seed reproduces the
/// same lattice on every standard library.
PlanarLattice random_rational_lattice(std::mt19937_64& rng);

}  // namespace wrl
