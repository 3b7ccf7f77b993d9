#include "wrl/highdim.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace wrl {

namespace {

void validate(const OrthoSpec& spec) {
  const int d = spec.dimension();
  if (d < 2 || d > kMaxDimension)
    throw std::invalid_argument("dimension must lie in [2, " + std::to_string(kMaxDimension) + "]");
  for (const Rational& l : spec.lengths_sq)
    if (l <= 0) throw std::invalid_argument("squared lengths must be positive");
}

std::vector<std::vector<Rational>> to_rational(const std::vector<IntVector>& vectors) {
  std::vector<std::vector<Rational>> rows;
  for (const IntVector& v : vectors) {
    std::vector<Rational> row;
    for (Eigen::Index i = 0; i < v.size(); ++i) row.emplace_back(v(i));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

LatticeD::LatticeD(IntMatrix basis, const OrthoSpec& spec) : basis_(std::move(basis)), spec_(spec) {
  validate(spec_);
  const int d = spec_.dimension();
  if (basis_.rows() != d || basis_.cols() != d) throw std::invalid_argument("basis must be d x d");
  if (determinant(basis_) == 0) throw std::invalid_argument("basis is singular");
  denominator_ = 1;
  for (const Rational& l : spec_.lengths_sq) denominator_ = mp::lcm(denominator_, denominator_of(l));
  for (const Rational& l : spec_.lengths_sq)
    scaled_lengths_.push_back(to_int64(numerator_of(l) * (denominator_ / denominator_of(l))));
  scaled_gram_ = IntMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      int128 s = 0;
      for (int k = 0; k < d; ++k) s += int128(basis_(i, k)) * basis_(j, k) * scaled_lengths_[static_cast<std::size_t>(k)];
      scaled_gram_(i, j) = static_cast<std::int64_t>(s);
    }
}

Rational LatticeD::gram(int i, int j) const { return Rational(BigInt(scaled_gram_(i, j)), denominator_); }

Rational LatticeD::norm(const IntVector& v) const {
  BigInt s = 0;
  for (Eigen::Index k = 0; k < v.size(); ++k)
    s += BigInt(v(k)) * v(k) * scaled_lengths_[static_cast<std::size_t>(k)];
  return Rational(s, denominator_);
}

bool LatticeD::contains(const IntVector& v) const {
  // Solve x·B = v exactly; the lattice contains v iff x is integral.
  const int d = dimension();
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d) + 1));
  for (int i = 0; i < d; ++i) {  // row i: Σ_j B(j,i)·x_j = v_i
    for (int j = 0; j < d; ++j) a[i][j] = Rational(basis_(j, i));
    a[i][d] = Rational(v(i));
  }
  for (int col = 0; col < d; ++col) {
    int pivot = col;
    while (a[pivot][col] == 0) ++pivot;
    std::swap(a[pivot], a[col]);
    for (int r = 0; r < d; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (int c = col; c <= d; ++c) a[r][c] -= f * a[col][c];
    }
  }
  for (int i = 0; i < d; ++i)
    if (!is_integer(a[i][d] / a[i][i])) return false;
  return true;
}

IntMatrix hermite_basis(const IntMatrix& generators) {
  // Integer row reduction column by column (gcd steps), dropping zero rows.
  std::vector<std::vector<BigInt>> rows;
  for (Eigen::Index r = 0; r < generators.rows(); ++r) {
    std::vector<BigInt> row;
    for (Eigen::Index c = 0; c < generators.cols(); ++c) row.emplace_back(generators(r, c));
    rows.push_back(std::move(row));
  }
  const auto cols = static_cast<std::size_t>(generators.cols());
  std::vector<std::vector<BigInt>> echelon;
  for (std::size_t col = 0; col < cols && !rows.empty(); ++col) {
    // Euclid on column `col` until at most one row is nonzero there.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r][col] != 0 && (best == rows.size() || mp::abs(rows[r][col]) < mp::abs(rows[best][col]))) best = r;
      if (best == rows.size()) break;
      bool reduced = false;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == best || rows[r][col] == 0) continue;
        const BigInt q = rows[r][col] / rows[best][col];
        for (std::size_t c = col; c < cols; ++c) rows[r][c] -= q * rows[best][c];
        reduced = true;
      }
      if (!reduced) {
        std::vector<BigInt> pivot = rows[best];
        if (pivot[col] < 0)
          for (auto& x : pivot) x = -x;
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
        echelon.push_back(std::move(pivot));
        break;
      }
    }
    std::erase_if(rows, [](const std::vector<BigInt>& r) {
      return std::all_of(r.begin(), r.end(), [](const BigInt& x) { return x == 0; });
    });
  }
  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t i = 0; i < echelon.size(); ++i) {
    std::size_t pc = 0;
    while (echelon[i][pc] == 0) ++pc;
    for (std::size_t r = 0; r < i; ++r) {
      BigInt q = echelon[r][pc] / echelon[i][pc];
      if (echelon[r][pc] - q * echelon[i][pc] < 0) --q;
      for (std::size_t c = pc; c < cols; ++c) echelon[r][c] -= q * echelon[i][c];
    }
  }
  IntMatrix out(static_cast<Eigen::Index>(echelon.size()), generators.cols());
  for (std::size_t r = 0; r < echelon.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = to_int64(echelon[r][c]);
  return out;
}

IntMatrix sign_vectors(int d) {
  IntMatrix out(Eigen::Index{1} << d, d);
  for (Eigen::Index mask = 0; mask < out.rows(); ++mask)
    for (int i = 0; i < d; ++i) out(mask, i) = (mask >> i) & 1 ? -1 : 1;
  return out;
}

IntMatrix balanced_sign_vectors(int d) {
  const IntMatrix all = sign_vectors(d);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index r = 0; r < all.rows(); ++r)
    if (all.row(r).sum() % d == 0) keep.push_back(r);
  IntMatrix out(static_cast<Eigen::Index>(keep.size()), d);
  for (std::size_t i = 0; i < keep.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = all.row(keep[i]);
  return out;
}

LatticeD fullsign_lattice(const OrthoSpec& spec) {
  validate(spec);
  return LatticeD(hermite_basis(sign_vectors(spec.dimension())), spec);
}

LatticeD subset_sign_lattice(const OrthoSpec& spec) {
  validate(spec);
  if (spec.dimension() % 2 != 0) throw std::invalid_argument("the balanced sign construction needs even d");
  return LatticeD(hermite_basis(balanced_sign_vectors(spec.dimension())), spec);
}

namespace {

/// Pairwise size reduction b_i −= k·b_j while some Gram diagonal entry shrinks.
IntMatrix size_reduce(IntMatrix basis, const LatticeD& lattice) {
  const int d = lattice.dimension();
  auto gram_of = [&](const IntMatrix& b) {
    IntMatrix g(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const Rational v = lattice.norm(IntVector(b.row(i).transpose() + b.row(j).transpose())) -
                           lattice.norm(b.row(i).transpose()) - lattice.norm(b.row(j).transpose());
        g(i, j) = to_int64(numerator_of(v * lattice.gram_denominator() / 2));
      }
    return g;
  };
  for (bool changed = true; changed;) {
    changed = false;
    const IntMatrix g = gram_of(basis);
    for (int i = 0; i < d && !changed; ++i)
      for (int j = 0; j < d && !changed; ++j) {
        if (i == j) continue;
        const std::int64_t k = floor_div<std::int64_t>(2 * g(i, j) + g(j, j), 2 * g(j, j));
        if (k == 0) continue;
        const int128 shrink = int128(k) * k * g(j, j) - int128(2) * k * g(i, j);
        if (shrink < 0) {
          basis.row(i) -= k * basis.row(j);
          changed = true;
        }
      }
  }
  return basis;
}

}  // namespace

ShortestVectors shortest_vectors(const LatticeD& lattice) {
  const int d = lattice.dimension();
  if (d > kMaxDimension) throw std::invalid_argument("dimension too large for exhaustive enumeration");
  const IntMatrix basis = size_reduce(lattice.basis(), lattice);
  const LatticeD reduced(basis, lattice.spec());
  const IntMatrix& g = reduced.scaled_gram();

  std::int64_t radius = g(0, 0);
  for (int i = 1; i < d; ++i) radius = std::min(radius, g(i, i));

  // Floating LDLᵀ: Q(x) = Σ_i diag_i (x_i + Σ_{j>i} mu(j,i) x_j)².
  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> mu =
      Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>::Zero(d, d);
  std::vector<long double> diag(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < i; ++j) {
      long double s = static_cast<long double>(g(i, j));
      for (int k = 0; k < j; ++k) s -= mu(i, k) * mu(j, k) * diag[static_cast<std::size_t>(k)];
      mu(i, j) = s / diag[static_cast<std::size_t>(j)];
    }
    long double s = static_cast<long double>(g(i, i));
    for (int k = 0; k < i; ++k) s -= mu(i, k) * mu(i, k) * diag[static_cast<std::size_t>(k)];
    diag[static_cast<std::size_t>(i)] = s;
  }
  const long double limit = static_cast<long double>(radius) * (1 + 1e-12L) + 1e-9L;

  std::vector<std::int64_t> x(static_cast<std::size_t>(d), 0);
  std::vector<IntVector> candidates;
  std::int64_t best = radius;
  auto exact_norm = [&]() {
    int128 s = 0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) s += int128(x[static_cast<std::size_t>(i)]) * x[static_cast<std::size_t>(j)] * g(i, j);
    return s;
  };
  // Coordinates are fixed from the last index down (mu(j, i) with j > i couples x_j into level i).
  std::function<void(int, long double)> descend = [&](int level, long double partial) {
    long double centre = 0;
    for (int j = level + 1; j < d; ++j) centre -= mu(j, level) * static_cast<long double>(x[static_cast<std::size_t>(j)]);
    const long double room = (limit - partial) / diag[static_cast<std::size_t>(level)];
    if (room < 0) return;
    const long double half = std::sqrt(room) + 1e-9L;
    const auto lo = static_cast<std::int64_t>(std::ceil(centre - half));
    const auto hi = static_cast<std::int64_t>(std::floor(centre + half));
    for (std::int64_t v = lo; v <= hi; ++v) {
      x[static_cast<std::size_t>(level)] = v;
      const long double t = static_cast<long double>(v) - centre;
      const long double next = partial + diag[static_cast<std::size_t>(level)] * t * t;
      if (level > 0) {
        descend(level - 1, next);
        continue;
      }
      const int128 q = exact_norm();
      if (q == 0 || q > best) continue;
      if (q < best) {
        best = static_cast<std::int64_t>(q);
        candidates.clear();
      }
      IntVector coeffs(d);
      for (int i = 0; i < d; ++i) coeffs(i) = x[static_cast<std::size_t>(i)];
      candidates.push_back((coeffs.transpose() * basis).transpose());
    }
    x[static_cast<std::size_t>(level)] = 0;
  };
  descend(d - 1, 0);

  return {Rational(BigInt(best), lattice.gram_denominator()), std::move(candidates)};
}

int rank_of(const std::vector<IntVector>& vectors) {
  auto rows = to_rational(vectors);
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows.size(); ++col) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    const auto& p = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / p[col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= f * p[c];
    }
    ++rank;
  }
  return rank;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return numerator_of(det);
}

bool is_well_rounded_d(const LatticeD& lattice) {
  return rank_of(shortest_vectors(lattice).vectors) == lattice.dimension();
}

}  // namespace wrl
