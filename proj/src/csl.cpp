#include "wrl/csl.hpp"

#include <algorithm>
#include <numeric>

namespace wrl {

std::int64_t gcd_abs(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

Axis primitive_axis(const BigInt& x, const BigInt& y) {
  const BigInt g = mp::gcd(mp::abs(x), mp::abs(y));
  if (g == 0) throw std::invalid_argument("zero axis");
  BigInt px = x / g, py = y / g;
  if (px < 0 || (px == 0 && py < 0)) {
    px = -px;
    py = -py;
  }
  return {to_int64(px), to_int64(py)};
}

std::optional<RationalMatrix2> reflection_matrix(const PlanarLattice& lattice, const Axis& v) {
  if (v[0] == 0 && v[1] == 0) throw std::invalid_argument("reflection axis must be nonzero");
  if (gcd_abs(v[0], v[1]) != 1) throw std::invalid_argument("reflection axis must be primitive");
  const GramMatrix2& g = lattice.gram;
  const QuadValue p(v[0]), q(v[1]);
  // w = G·v, length² = vᵀ·G·v
  const QuadValue w1 = g.g11 * p + g.g12 * q;
  const QuadValue w2 = g.g12 * p + g.g22 * q;
  const QuadValue scale = QuadValue(2) / (p * w1 + q * w2);
  const QuadValue e11 = scale * p * w1 - QuadValue(1), e12 = scale * p * w2;
  const QuadValue e21 = scale * q * w1, e22 = scale * q * w2 - QuadValue(1);
  for (const QuadValue* e : {&e11, &e12, &e21, &e22})
    if (!e->is_rational()) return std::nullopt;
  return RationalMatrix2{e11.rational_part(), e12.rational_part(), e21.rational_part(), e22.rational_part()};
}

BigInt csl_index(const RationalMatrix2& s) {
  if (s * s != RationalMatrix2::identity()) throw std::invalid_argument("csl_index needs an involution");
  BigInt q = 1;
  for (const Rational* e : {&s.m11, &s.m12, &s.m21, &s.m22}) q = mp::lcm(q, denominator_of(*e));
  auto scaled = [&](const Rational& e) { return numerator_of(e) * (q / denominator_of(e)); };
  const BigInt a = scaled(s.m11), b = scaled(s.m12), c = scaled(s.m21), d = scaled(s.m22);
  // 2×2 Smith invariants: d1 = gcd of entries, d1·d2 = |det|.
  const BigInt d1 = mp::gcd(mp::gcd(mp::abs(a), mp::abs(b)), mp::gcd(mp::abs(c), mp::abs(d)));
  const BigInt d2 = mp::abs(a * d - b * c) / d1;
  const BigInt kernel = mp::gcd(d1, q) * mp::gcd(d2, q);
  return q * q / kernel;
}

namespace {

bool rational_up_to_scalar(const GramMatrix2& g) {
  const QuadValue* entries[] = {&g.g11, &g.g12, &g.g22};
  for (const QuadValue* x : entries)
    for (const QuadValue* y : entries)
      if (sign(*x) != 0 && sign(*y) != 0 && !(*x / *y).is_rational()) return false;
  return true;
}

}  // namespace

ReflectionScan coincidence_reflections(const PlanarLattice& lattice, std::int64_t axis_bound) {
  if (axis_bound < 1) throw std::invalid_argument("axis bound must be positive");
  std::vector<Axis> axes;
  for (std::int64_t p = 0; p <= axis_bound; ++p)
    for (std::int64_t q = -axis_bound; q <= axis_bound; ++q)
      if ((p > 0 || q > 0) && gcd_abs(p, q) == 1) axes.push_back({p, q});
  std::sort(axes.begin(), axes.end(), [](const Axis& x, const Axis& y) {
    const auto nx = std::max(std::abs(x[0]), std::abs(x[1])), ny = std::max(std::abs(y[0]), std::abs(y[1]));
    return std::tie(nx, x) < std::tie(ny, y);
  });

  ReflectionScan scan;
  scan.all_rational = rational_up_to_scalar(lattice.gram);
  for (const Axis& v : axes) {
    auto s = reflection_matrix(lattice, v);
    if (!s) continue;
    const bool seen = std::any_of(scan.reflections.begin(), scan.reflections.end(),
                                  [&](const ReflectionWitness& r) { return r.matrix == *s; });
    if (!seen) scan.reflections.push_back({v, *s, csl_index(*s)});
  }
  return scan;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "CONSISTENT";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    case Verdict::Violation: return "VIOLATION";
  }
  return "?";
}

HarnessReport theorem1_harness(const PlanarLattice& lattice, std::int64_t axis_bound, std::int64_t index_bound) {
  HarnessReport report;
  report.scan = coincidence_reflections(lattice, axis_bound);
  report.wr_witness = find_sublattice_witness(
      lattice, index_bound, {ShapeClass::Square, ShapeClass::Hexagonal, ShapeClass::RhombicWR});

  if (report.wr_witness) {
    const IntMatrix2& b = report.wr_witness->reduced_basis;
    for (int s : {1, -1}) {
      const Axis axis = primitive_axis(b.m11 + s * b.m21, b.m12 + s * b.m22);
      if (auto m = reflection_matrix(lattice, axis)) {
        report.witness_mirror = ReflectionWitness{axis, *m, csl_index(*m)};
        break;
      }
    }
  }

  const bool reflection = !report.scan.reflections.empty();
  const bool wr = report.wr_witness.has_value();
  if (wr && !report.witness_mirror) {
    report.verdict = Verdict::Violation;
  } else if (reflection == wr) {
    report.verdict = Verdict::Consistent;
  } else {
    report.verdict = Verdict::Inconclusive;
  }
  return report;
}

}  // namespace wrl
