#include "wrl/sublattice.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace wrl {

std::vector<SublatticeHNF> enumerate_hnf(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("index must be positive");
  std::vector<SublatticeHNF> out;
  for (std::int64_t a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    const std::int64_t d = n / a;
    for (std::int64_t b = 0; b < d; ++b) out.push_back({a, b, d});
  }
  return out;
}

std::int64_t sigma(std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s += d;
    if (d * d != n) s += n / d;
  }
  return s;
}

ShapePredicate ShapePredicate::well_rounded() { return {"wr", is_wr_shape}; }

ShapePredicate ShapePredicate::shape(ShapeClass s) {
  return {to_string(s), [s](ShapeClass x) { return x == s; }};
}

ShapePredicate ShapePredicate::any_of(const std::set<ShapeClass>& shapes) {
  std::string name;
  for (ShapeClass s : shapes) name += (name.empty() ? "" : "|") + std::string(to_string(s));
  return {name, [shapes](ShapeClass x) { return shapes.contains(x); }};
}

ShapePredicate ShapePredicate::similar_to(const PlanarLattice& parent) {
  const ShapeClass s = classify(parent);
  return {std::string("similar:") + to_string(s), [s](ShapeClass x) { return x == s; }};
}

ShapePredicate ShapePredicate::never() {
  return {"never", [](ShapeClass) { return false; }};
}

namespace {

/// Exact sublattice shapes, on an integral form when the lattice is rational
/// up to scale and on QuadValues otherwise.
struct ZSqrt {
  int128 x = 0;
  int128 y = 0;
};

int zsign(const ZSqrt& v, std::int64_t m) {
  const int sx = sign_of(v.x), sy = sign_of(v.y);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  const int128 x2 = v.x * v.x, my2 = v.y * v.y * m;
  const int cmp = sign_of(x2 - my2);
  return sx > 0 ? cmp : -cmp;
}

/// Gram entry scaled to integers over Z[√m].
struct ScaledForm {
  std::int64_t radicand = 0;
  std::int64_t a11 = 0, a12 = 0, a22 = 0;  // rational parts
  std::int64_t b11 = 0, b12 = 0, b22 = 0;  // √m parts

  ZSqrt bilinear(std::int64_t x1, std::int64_t y1, std::int64_t x2, std::int64_t y2) const {
    const int128 xx = int128(x1) * x2, xy = int128(x1) * y2 + int128(y1) * x2, yy = int128(y1) * y2;
    return {a11 * xx + a12 * xy + a22 * yy, b11 * xx + b12 * xy + b22 * yy};
  }
};

ScaledForm scale_to_integers(const GramMatrix2& g, std::int64_t m) {
  BigInt l = 1;
  for (const QuadValue* e : {&g.g11, &g.g12, &g.g22}) {
    l = mp::lcm(l, denominator_of(e->rational_part()));
    l = mp::lcm(l, denominator_of(e->irrational_part()));
  }
  auto part = [&](const Rational& r) { return to_int64(numerator_of(r) * (l / denominator_of(r))); };
  return {m,
          part(g.g11.rational_part()),
          part(g.g12.rational_part()),
          part(g.g22.rational_part()),
          part(g.g11.irrational_part()),
          part(g.g12.irrational_part()),
          part(g.g22.irrational_part())};
}

/// Gauss reduction in long double, keeping only the unimodular transform.
/// The exact reduction that follows then starts next to its fixed point.
Mat2<std::int64_t> approximate_basis(const Gram2<long double>& g0, const SublatticeHNF& h) {
  Mat2<long double> rows{static_cast<long double>(h.a), static_cast<long double>(h.b), 0, static_cast<long double>(h.d)};
  Gram2<long double> g = transform_gram(g0, rows);
  Mat2<std::int64_t> u{1, 0, 0, 1};
  for (int iter = 0; iter < 200; ++iter) {
    if (g.g11 > g.g22) {
      std::swap(g.g11, g.g22);
      std::swap(u.m11, u.m21);
      std::swap(u.m12, u.m22);
    }
    const long double k = std::nearbyint(g.g12 / g.g11);
    if (k == 0 || !std::isfinite(k)) break;
    g.g22 += k * k * g.g11 - 2 * k * g.g12;
    g.g12 -= k * g.g11;
    const auto ki = static_cast<std::int64_t>(k);
    u.m21 -= ki * u.m11;
    u.m22 -= ki * u.m12;
  }
  return u * Mat2<std::int64_t>{h.a, h.b, 0, h.d};
}

Mat2<BigInt> to_big(const Mat2<std::int64_t>& m) { return {BigInt(m.m11), BigInt(m.m12), BigInt(m.m21), BigInt(m.m22)}; }

class ShapeOracle {
 public:
  explicit ShapeOracle(const PlanarLattice& lattice)
      : quad_(lattice.gram),
        approx_{to_long_double(lattice.gram.g11), to_long_double(lattice.gram.g12), to_long_double(lattice.gram.g22)},
        integral_(integral_form(lattice.gram)) {
    if (integral_) return;
    try {
      scaled_ = scale_to_integers(lattice.gram, lattice.radicand());
    } catch (const std::exception&) {
      scaled_.reset();  // entries too large for the int128 path
    }
  }

  ShapeClass shape(const SublatticeHNF& h) const {
    if (integral_) {
      const Mat2<int128> rows{h.a, h.b, 0, h.d};
      return classify_reduced(reduce_form(transform_gram(*integral_, rows)));
    }
    const Mat2<std::int64_t> basis = approximate_basis(approx_, h);
    if (scaled_)
      if (auto s = classify_scaled(basis)) return *s;
    return classify_reduced(reduce_form(transform_gram(quad_, to_big(basis))));
  }

  /// Shape plus reduced basis in lattice coordinates.
  std::pair<ShapeClass, IntMatrix2> shape_and_basis(const SublatticeHNF& h) const {
    if (integral_) {
      const Mat2<int128> rows{h.a, h.b, 0, h.d};
      Mat2<int128> u;
      const auto reduced = reduce_form(transform_gram(*integral_, rows), &u);
      const Mat2<int128> basis = u * rows;
      auto big = [](int128 v) { return BigInt(static_cast<std::int64_t>(v)); };
      return {classify_reduced(reduced), {big(basis.m11), big(basis.m12), big(basis.m21), big(basis.m22)}};
    }
    const IntMatrix2 start = to_big(approximate_basis(approx_, h));
    IntMatrix2 u;
    const auto reduced = reduce_form(transform_gram(quad_, start), &u);
    return {classify_reduced(reduced), u * start};
  }

 private:
  GramMatrix2 quad_;
  Gram2<long double> approx_;
  std::optional<Gram2<int128>> integral_;
  std::optional<ScaledForm> scaled_;

  /// Exact shape of the form spanned by `b` when it is already reduced; empty
  /// when it is not, or when the int128 evaluation could overflow.
  std::optional<ShapeClass> classify_scaled(const Mat2<std::int64_t>& b) const {
    const ScaledForm& f = *scaled_;
    const std::int64_t coord = std::max({std::abs(b.m11), std::abs(b.m12), std::abs(b.m21), std::abs(b.m22)});
    const std::int64_t coeff = std::max({std::abs(f.a11), std::abs(f.a12), std::abs(f.a22), std::abs(f.b11),
                                         std::abs(f.b12), std::abs(f.b22)});
    const long double bound = 4.0L * coeff * coord * coord * (1 + std::sqrt(static_cast<long double>(f.radicand)));
    if (bound > 1e18L) return std::nullopt;
    const std::int64_t m = f.radicand;
    const ZSqrt q11 = f.bilinear(b.m11, b.m12, b.m11, b.m12);
    const ZSqrt q22 = f.bilinear(b.m21, b.m22, b.m21, b.m22);
    ZSqrt q12 = f.bilinear(b.m11, b.m12, b.m21, b.m22);
    if (zsign(q12, m) < 0) q12 = {-q12.x, -q12.y};
    const int order = zsign({q22.x - q11.x, q22.y - q11.y}, m);
    const int half = zsign({2 * q12.x - q11.x, 2 * q12.y - q11.y}, m);
    if (order < 0 || half > 0) return std::nullopt;
    const bool orthogonal = q12.x == 0 && q12.y == 0;
    if (order == 0) return orthogonal ? ShapeClass::Square : half == 0 ? ShapeClass::Hexagonal : ShapeClass::RhombicWR;
    return orthogonal ? ShapeClass::Rectangular : half == 0 ? ShapeClass::RhombicNonWR : ShapeClass::Oblique;
  }
};

std::int64_t count_index(const ShapeOracle& oracle, std::int64_t n, const ShapePredicate& predicate) {
  std::int64_t count = 0;
  for (std::int64_t a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    const std::int64_t d = n / a;
    for (std::int64_t b = 0; b < d; ++b)
      if (predicate.accepts(oracle.shape({a, b, d}))) ++count;
  }
  return count;
}

}  // namespace

std::int64_t count_by_shape(const PlanarLattice& lattice, std::int64_t n, const ShapePredicate& predicate) {
  if (n < 1) throw std::invalid_argument("index must be positive");
  return count_index(ShapeOracle(lattice), n, predicate);
}

CountTable count_table(const PlanarLattice& lattice, std::int64_t max_n, const ShapePredicate& predicate,
                       unsigned workers) {
  if (max_n < 1) throw std::invalid_argument("max_n must be positive");
  CountTable table{predicate.name, std::vector<std::int64_t>(static_cast<std::size_t>(max_n) + 1, 0)};
  const ShapeOracle oracle(lattice);
  workers = std::max(1u, workers);
  // Interleaved assignment balances the σ(n) cost; each slot has one writer.
  auto run = [&](unsigned w) {
    for (std::int64_t n = 1 + w; n <= max_n; n += workers)
      table.counts[static_cast<std::size_t>(n)] = count_index(oracle, n, predicate);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  return table;
}

namespace {

/// x + y·√m with small integer parts.

struct NormedVector {
  std::int64_t qx, qy;  // scaled norm parts
  std::int32_t x, y;
};

}  // namespace

CountTable count_wr_by_minimal_pairs(const PlanarLattice& lattice, std::int64_t max_n) {
  if (max_n < 1) throw std::invalid_argument("max_n must be positive");
  // Work in a reduced basis: indices are invariant under unimodular changes.
  const GramMatrix2 reduced = reduce_form(lattice.gram);
  const std::int64_t m = lattice.radicand();
  const ScaledForm form = scale_to_integers(reduced, m);

  const long double g11 = to_long_double(reduced.g11);
  const long double g12 = to_long_double(reduced.g12);
  const long double det = to_long_double(reduced.det());
  // Minimal vectors of an index-n WR sublattice have norm <= 2n·sqrt(det)/sqrt(3).
  const long double radius = 2.0L * static_cast<long double>(max_n) * std::sqrt(det) / std::sqrt(3.0L) *
                                 (1.0L + 1e-9L) + 1e-9L;

  // Magnitude guard for the 128-bit sign tests below.
  const long double coeff = std::max({std::abs(form.a11), std::abs(form.a12), std::abs(form.a22),
                                      std::abs(form.b11), std::abs(form.b12), std::abs(form.b22),
                                      std::int64_t{1}}) * 1.0L;
  const long double ymax_f = std::sqrt(radius * g11 / det) + 1.0L;
  const long double span = std::sqrt(radius / g11) + ymax_f + 2.0L;
  if (coeff * 4.0L * span * span * (1.0L + std::sqrt(static_cast<long double>(m))) > 2.0e18L || span > 2.0e9L)
    throw std::overflow_error("lattice too large for the 64-bit minimal-pair counter");

  // Half plane y > 0 or (y == 0, x > 0); the partner v ranges over both signs.
  std::vector<NormedVector> vectors;
  const auto ymax = static_cast<std::int64_t>(ymax_f);
  for (std::int64_t y = 0; y <= ymax; ++y) {
    const long double rest = radius - det / g11 * static_cast<long double>(y * y);
    if (rest < 0) continue;
    const long double centre = -g12 / g11 * static_cast<long double>(y);
    const long double half = std::sqrt(rest / g11) + 1.0L;
    const auto lo = static_cast<std::int64_t>(std::floor(centre - half));
    const auto hi = static_cast<std::int64_t>(std::ceil(centre + half));
    for (std::int64_t x = lo; x <= hi; ++x) {
      if (y == 0 && x <= 0) continue;
      const ZSqrt q = form.bilinear(x, y, x, y);
      vectors.push_back({static_cast<std::int64_t>(q.x), static_cast<std::int64_t>(q.y),
                         static_cast<std::int32_t>(x), static_cast<std::int32_t>(y)});
    }
  }
  std::sort(vectors.begin(), vectors.end(), [](const NormedVector& p, const NormedVector& q) {
    return std::tie(p.qx, p.qy) < std::tie(q.qx, q.qy);
  });

  std::vector<std::int64_t> plain(static_cast<std::size_t>(max_n) + 1, 0);
  std::vector<std::int64_t> hexagonal(static_cast<std::size_t>(max_n) + 1, 0);
  for (std::size_t lo = 0; lo < vectors.size();) {
    std::size_t hi = lo;
    while (hi < vectors.size() && vectors[hi].qx == vectors[lo].qx && vectors[hi].qy == vectors[lo].qy) ++hi;
    const ZSqrt norm{vectors[lo].qx, vectors[lo].qy};
    for (std::size_t i = lo; i < hi; ++i) {
      const auto& u = vectors[i];
      for (std::size_t j = lo; j < hi; ++j) {
        for (int s : {1, -1}) {
          const std::int64_t vx = s * vectors[j].x, vy = s * vectors[j].y;
          const std::int64_t cross = std::int64_t{u.x} * vy - std::int64_t{u.y} * vx;
          if (cross <= 0 || cross > max_n) continue;
          ZSqrt b = form.bilinear(u.x, u.y, vx, vy);
          if (zsign(b, m) < 0) b = {-b.x, -b.y};
          const int cmp = zsign({2 * b.x - norm.x, 2 * b.y - norm.y}, m);
          if (cmp > 0) continue;
          (cmp == 0 ? hexagonal : plain)[static_cast<std::size_t>(cross)] += 1;
        }
      }
    }
    lo = hi;
  }

  // Half of the 4 (resp. 12) oriented minimal pairs start in the half plane.
  CountTable table{"wr", std::vector<std::int64_t>(static_cast<std::size_t>(max_n) + 1, 0)};
  for (std::size_t n = 1; n < table.counts.size(); ++n) {
    if (plain[n] % 2 != 0 || hexagonal[n] % 6 != 0)
      throw std::logic_error("minimal-pair multiplicity mismatch at n = " + std::to_string(n));
    table.counts[n] = plain[n] / 2 + hexagonal[n] / 6;
  }
  return table;
}

SummatoryReport summatory(const CountTable& table, const std::vector<std::int64_t>& grid,
                          const SummatoryModel& model) {
  if (!std::is_sorted(grid.begin(), grid.end())) throw std::invalid_argument("x grid must be sorted");
  SummatoryReport report;
  std::int64_t acc = 0;
  std::int64_t n = 0;
  for (std::int64_t x : grid) {
    if (x > table.max_n()) throw std::out_of_range("x beyond the count table");
    while (n < x) acc += table[++n];
    const auto xf = static_cast<long double>(x);
    const long double value = model.value ? model.value(xf) : 0.0L;
    const long double scale = model.scale ? model.scale(xf) : 1.0L;
    report.x.push_back(x);
    report.cumulative.push_back(acc);
    report.model.push_back(value);
    report.residual.push_back(static_cast<long double>(acc) - value);
    report.normalized_residual.push_back(scale != 0 ? (static_cast<long double>(acc) - value) / scale : 0.0L);
  }
  return report;
}

std::vector<std::int64_t> log_grid(std::int64_t lo, std::int64_t hi, std::size_t points) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("bad grid range");
  std::vector<std::int64_t> grid;
  if (points < 2) points = 2;
  const long double step = std::log(static_cast<long double>(hi) / lo) / static_cast<long double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    auto x = static_cast<std::int64_t>(std::llround(lo * std::exp(step * i)));
    x = std::clamp(x, lo, hi);
    if (grid.empty() || x > grid.back()) grid.push_back(x);
  }
  if (grid.back() != hi) grid.push_back(hi);
  return grid;
}

std::optional<SublatticeWitness> find_sublattice_witness(const PlanarLattice& lattice,
                                                         std::int64_t index_bound,
                                                         const std::set<ShapeClass>& target) {
  if (index_bound < 1) throw std::invalid_argument("index bound must be positive");
  const ShapeOracle oracle(lattice);
  for (std::int64_t n = 1; n <= index_bound; ++n) {
    for (const SublatticeHNF& h : enumerate_hnf(n)) {
      if (!target.contains(oracle.shape(h))) continue;
      auto [shape, basis] = oracle.shape_and_basis(h);
      return SublatticeWitness{n, h, shape, basis};
    }
  }
  return std::nullopt;
}

}  // namespace wrl
