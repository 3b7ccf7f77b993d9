#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wrl/lattice.hpp"

namespace wrl {

/// Index-n sublattice in Hermite normal form: basis rows (a, b) and (0, d),
/// 0 <= b < d, index a·d.
struct SublatticeHNF {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t d = 1;

  std::int64_t index() const { return a * d; }
  IntMatrix2 rows() const { return {BigInt(a), BigInt(b), BigInt(0), BigInt(d)}; }

  friend auto operator<=>(const SublatticeHNF&, const SublatticeHNF&) = default;
};

/// One representative per index-n sublattice, ordered lexicographically by (a, b).
std::vector<SublatticeHNF> enumerate_hnf(std::int64_t n);

/// Sum of divisors.
std::int64_t sigma(std::int64_t n);

/// A named test on the shape of a sublattice.
struct ShapePredicate {
  std::string name;
  std::function<bool(ShapeClass)> accepts;

  static ShapePredicate well_rounded();
  static ShapePredicate shape(ShapeClass s);
  static ShapePredicate any_of(const std::set<ShapeClass>& shapes);
  /// Shape equal to the parent lattice's shape.
  static ShapePredicate similar_to(const PlanarLattice& parent);
  static ShapePredicate never();
};

/// Counts per index; counts[0] is unused.
struct CountTable {
  std::string predicate;
  std::vector<std::int64_t> counts;

  std::int64_t max_n() const { return static_cast<std::int64_t>(counts.size()) - 1; }
  std::int64_t operator[](std::int64_t n) const { return counts.at(static_cast<std::size_t>(n)); }
};

std::int64_t count_by_shape(const PlanarLattice& lattice, std::int64_t n, const ShapePredicate& predicate);

/// Brute force over all HNF sublattices of index n <= max_n. Work is split over
/// n; the table is identical for every worker count.
CountTable count_table(const PlanarLattice& lattice, std::int64_t max_n, const ShapePredicate& predicate,
                       unsigned workers = 1);

/// Well-rounded sublattice counts from equal-length vector pairs.
///
/// Every WR sublattice of index n is spanned by two minimal vectors u, v with
/// |u| = |v|, 2|<u,v>| <= |u|² and det(u, v) = n. Each such sublattice owns four
/// positively oriented minimal pairs, or twelve when it is hexagonal. Lattice
/// vectors up to the norm 2n·sqrt(det G)/sqrt(3) are listed once and grouped by exact norm.
CountTable count_wr_by_minimal_pairs(const PlanarLattice& lattice, std::int64_t max_n);

/// Model curve for a summatory report: value(x) and the scale that divides
/// the residual.
struct SummatoryModel {
  std::string name;
  std::function<long double(long double)> value;
  std::function<long double(long double)> scale;
};

struct SummatoryReport {
  std::vector<std::int64_t> x;
  std::vector<std::int64_t> cumulative;  ///< A(x)
  std::vector<long double> model;
  std::vector<long double> residual;
  std::vector<long double> normalized_residual;
};

/// Exact A(x) = Σ_{n<=x} c(n) on a sorted grid (every x <= table.max_n()).
SummatoryReport summatory(const CountTable& table, const std::vector<std::int64_t>& grid,
                          const SummatoryModel& model);

/// Logarithmically spaced integer grid on [lo, hi] with about `points` entries.
std::vector<std::int64_t> log_grid(std::int64_t lo, std::int64_t hi, std::size_t points);

struct SublatticeWitness {
  std::int64_t index = 0;
  SublatticeHNF hnf;
  ShapeClass shape = ShapeClass::Oblique;
  /// Reduced basis of the sublattice, rows in lattice coordinates.
  IntMatrix2 reduced_basis;
};

/// Smallest-index sublattice (ties by HNF order) whose shape is in `target`.
/// An empty result only means "none up to index_bound".
std::optional<SublatticeWitness> find_sublattice_witness(const PlanarLattice& lattice,
                                                         std::int64_t index_bound,
                                                         const std::set<ShapeClass>& target);

}  // namespace wrl
