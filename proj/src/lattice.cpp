#include "wrl/lattice.hpp"

#include <array>

namespace wrl {

const char* to_string(ShapeClass shape) {
  switch (shape) {
    case ShapeClass::Square: return "square";
    case ShapeClass::Hexagonal: return "hexagonal";
    case ShapeClass::RhombicWR: return "rhombic-wr";
    case ShapeClass::RhombicNonWR: return "rhombic-nonwr";
    case ShapeClass::Rectangular: return "rectangular";
    case ShapeClass::Oblique: return "oblique";
  }
  return "?";
}

namespace {

std::int64_t shared_radicand(const GramMatrix2& g) {
  std::int64_t m = 0;
  for (const QuadValue* x : {&g.g11, &g.g12, &g.g22}) {
    if (x->radicand() == 0) continue;
    if (m != 0 && x->radicand() != m) throw RadicandMismatch("Gram entries use different radicands");
    m = x->radicand();
  }
  return m;
}

}  // namespace

PlanarLattice PlanarLattice::from_gram(const GramMatrix2& gram, std::string label) {
  shared_radicand(gram);
  if (sign(gram.g11) <= 0 || sign(gram.det()) <= 0)
    throw NotPositiveDefinite("Gram matrix " + to_string(gram) + " is not positive definite");
  return PlanarLattice{gram, std::move(label)};
}

PlanarLattice PlanarLattice::square() { return from_gram({1, 0, 1}, "square"); }
PlanarLattice PlanarLattice::triangle() { return from_gram({2, 1, 2}, "triangle"); }

std::int64_t PlanarLattice::radicand() const { return shared_radicand(gram); }

GramMatrix2 parse_gram(std::string_view text, std::optional<std::int64_t> radicand) {
  std::array<QuadValue, 3> entries;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t comma = text.find(',', start);
    if ((i < 2) == (comma == std::string_view::npos))
      throw std::invalid_argument("Gram text must be \"g11,g12,g22\", got \"" + std::string(text) + "\"");
    const std::size_t end = i < 2 ? comma : text.size();
    entries[i] = parse_quad(text.substr(start, end - start), radicand);
    start = end + 1;
  }
  return {entries[0], entries[1], entries[2]};
}

std::string to_string(const GramMatrix2& g) {
  return to_string(g.g11) + "," + to_string(g.g12) + "," + to_string(g.g22);
}

Reduction lagrange_reduce(const GramMatrix2& gram) {
  if (sign(gram.g11) <= 0 || sign(gram.det()) <= 0)
    throw NotPositiveDefinite("Gram matrix " + to_string(gram) + " is not positive definite");
  Reduction r;
  r.reduced = reduce_form(gram, &r.transform);
  return r;
}

Minima minima(const PlanarLattice& lattice) {
  const GramMatrix2 r = reduce_form(lattice.gram);
  return {r.g11, r.g22};
}

bool is_well_rounded(const PlanarLattice& lattice) {
  const Minima m = minima(lattice);
  return m.lambda1_sq == m.lambda2_sq;
}

ShapeClass classify(const PlanarLattice& lattice) { return classify_reduced(reduce_form(lattice.gram)); }

GramMatrix2 sublattice_gram(const PlanarLattice& lattice, const IntMatrix2& h) {
  if (h.det() == 0) throw std::invalid_argument("singular sublattice basis");
  return transform_gram(lattice.gram, h);
}

std::optional<Gram2<int128>> integral_form(const GramMatrix2& gram) {
  // Divide by g11 (nonzero); the quotients must all be rational.
  const QuadValue r12 = gram.g12 / gram.g11;
  const QuadValue r22 = gram.g22 / gram.g11;
  if (!r12.is_rational() || !r22.is_rational()) return std::nullopt;
  const Rational q12 = r12.rational_part(), q22 = r22.rational_part();
  const BigInt l = mp::lcm(denominator_of(q12), denominator_of(q22));
  BigInt a = l, b = numerator_of(q12) * (l / denominator_of(q12)), c = numerator_of(q22) * (l / denominator_of(q22));
  const BigInt g = mp::gcd(mp::gcd(a, mp::abs(b)), c);
  a /= g;
  b /= g;
  c /= g;
  const BigInt limit = BigInt(1) << 40;
  if (a > limit || mp::abs(b) > limit || c > limit) return std::nullopt;
  return Gram2<int128>{static_cast<int128>(to_int64(a)), static_cast<int128>(to_int64(b)),
                       static_cast<int128>(to_int64(c))};
}

PlanarLattice random_rational_lattice(std::mt19937_64& rng) {
  auto draw = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  auto entry = [&](std::int64_t lo) { return Rational(draw(lo, 6), draw(1, 3)); };
  for (;;) {
    const Rational g11 = entry(1), g22 = entry(1), g12 = entry(-6);
    if (g11 * g22 - g12 * g12 <= 0) continue;
    return PlanarLattice::from_gram({QuadValue(g11), QuadValue(g12), QuadValue(g22)}, "random");
  }
}

}  // namespace wrl
