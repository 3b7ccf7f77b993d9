#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wrl/lattice.hpp"

using namespace wrl;

namespace {

IntMatrix2 random_unimodular(std::mt19937_64& rng, int steps) {
  IntMatrix2 u = IntMatrix2::identity();
  for (int i = 0; i < steps; ++i) {
    const BigInt k = static_cast<std::int64_t>(rng() % 7) - 3;
    const IntMatrix2 e = (rng() & 1) ? IntMatrix2{1, k, 0, 1} : IntMatrix2{1, 0, k, 1};
    u = e * u;
  }
  if (rng() & 1) u = IntMatrix2{0, 1, 1, 0} * u;
  return u;
}

/// λ1², λ2² of an integral form by scanning a coordinate box.
std::pair<std::int64_t, std::int64_t> box_minima(std::int64_t a, std::int64_t b, std::int64_t c, int r) {
  auto q = [&](std::int64_t x, std::int64_t y) { return a * x * x + 2 * b * x * y + c * y * y; };
  std::int64_t l1 = -1, x1 = 0, y1 = 0;
  for (int x = -r; x <= r; ++x)
    for (int y = -r; y <= r; ++y)
      if ((x || y) && (l1 < 0 || q(x, y) < l1)) {
        l1 = q(x, y);
        x1 = x;
        y1 = y;
      }
  std::int64_t l2 = -1;
  for (int x = -r; x <= r; ++x)
    for (int y = -r; y <= r; ++y)
      if (x * y1 - y * x1 != 0 && (l2 < 0 || q(x, y) < l2)) l2 = q(x, y);
  return {l1, l2};
}

}  // namespace

TEST_CASE("presets") {
  CHECK(classify(PlanarLattice::square()) == ShapeClass::Square);
  CHECK(classify(PlanarLattice::triangle()) == ShapeClass::Hexagonal);
  CHECK(is_well_rounded(PlanarLattice::square()));
  CHECK(PlanarLattice::triangle().radicand() == 0);
}

TEST_CASE("gram text") {
  const GramMatrix2 g = parse_gram("1,1/3*sqrt(2),2", 2);
  CHECK(g.g12 == QuadValue(0, Rational(1, 3), 2));
  CHECK(PlanarLattice::from_gram(g).radicand() == 2);
  CHECK(to_string(PlanarLattice::triangle().gram) == "2,1,2");
  CHECK_THROWS_AS(parse_gram("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(PlanarLattice::from_gram(parse_gram("1,2,1")), NotPositiveDefinite);
  CHECK_THROWS_AS(PlanarLattice::from_gram(parse_gram("-1,0,-1")), NotPositiveDefinite);
  CHECK_THROWS(PlanarLattice::from_gram(parse_gram("1,sqrt(2),sqrt(3)")));
}

TEST_CASE("shape examples") {
  auto shape = [](const char* text, std::optional<std::int64_t> m = std::nullopt) {
    return classify(PlanarLattice::from_gram(parse_gram(text, m)));
  };
  CHECK(shape("1,0,1") == ShapeClass::Square);
  CHECK(shape("1,1/2,1") == ShapeClass::Hexagonal);
  CHECK(shape("1,1/3,1") == ShapeClass::RhombicWR);
  CHECK(shape("1,0,2") == ShapeClass::Rectangular);
  CHECK(shape("2,1,3") == ShapeClass::RhombicNonWR);
  CHECK(shape("2,1/3,3") == ShapeClass::Oblique);
  CHECK(shape("1,0,sqrt(2)", 2) == ShapeClass::Rectangular);
  CHECK(shape("1,1/3*sqrt(2),2", 2) == ShapeClass::Oblique);
  // An unreduced basis of the square lattice: rows (1,0) and (3,1).
  CHECK(shape("1,3,10") == ShapeClass::Square);
  // Rows (2,1), (1,1) of the triangle lattice.
  CHECK(shape("14,9,6") == ShapeClass::Hexagonal);
}

TEST_CASE("reduction is canonical and basis independent") {
  std::mt19937_64 rng(5);
  const std::vector<const char*> grams = {"1,0,1", "2,1,2", "3,1,5", "1,1/3*sqrt(2),2", "2,1+1*sqrt(3),5",
                                          "1,0,sqrt(2)", "7/2,-1/3,9/5"};
  for (const char* text : grams) {
    const std::optional<std::int64_t> m = std::string(text).find("sqrt(2)") != std::string::npos   ? 2
                                          : std::string(text).find("sqrt(3)") != std::string::npos ? 3
                                                                                                     : 0;
    const GramMatrix2 g = parse_gram(text, *m ? m : std::nullopt);
    const Reduction base = lagrange_reduce(g);
    CHECK(base.transform.det() * base.transform.det() == 1);
    CHECK(transform_gram(g, base.transform) == base.reduced);
    CHECK(lagrange_reduce(base.reduced).reduced == base.reduced);  // idempotent
    const GramMatrix2& r = base.reduced;
    CHECK(r.g11 <= r.g22);
    CHECK(QuadValue(0) <= r.g12);
    CHECK(QuadValue(2) * r.g12 <= r.g11);
    for (int i = 0; i < 40; ++i) {
      const IntMatrix2 u = random_unimodular(rng, 6);
      const PlanarLattice moved = PlanarLattice::from_gram(transform_gram(g, u));
      CHECK(lagrange_reduce(moved.gram).reduced == r);
      CHECK(classify(moved) == classify(PlanarLattice::from_gram(g)));
      CHECK(minima(moved).lambda1_sq == r.g11);
    }
  }
}

TEST_CASE("minima match a coordinate-box scan") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::int64_t a = 1 + static_cast<std::int64_t>(rng() % 30);
    const std::int64_t c = 1 + static_cast<std::int64_t>(rng() % 30);
    const std::int64_t b = static_cast<std::int64_t>(rng() % 41) - 20;
    if (a * c - b * b <= 0) continue;
    const PlanarLattice l = PlanarLattice::from_gram({QuadValue(a), QuadValue(b), QuadValue(c)});
    const auto [l1, l2] = box_minima(a, b, c, 25);
    const Minima mins = minima(l);
    CHECK(mins.lambda1_sq == QuadValue(l1));
    CHECK(mins.lambda2_sq == QuadValue(l2));
    CHECK(is_well_rounded(l) == (l1 == l2));
  }
}

TEST_CASE("scaling preserves shape") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const PlanarLattice l = random_rational_lattice(rng);
    const QuadValue t(Rational(1 + static_cast<std::int64_t>(rng() % 9), 1 + static_cast<std::int64_t>(rng() % 5)));
    const QuadValue s2(0, 1 + static_cast<std::int64_t>(rng() % 4), 2);
    for (const QuadValue& f : {t, s2}) {
      const PlanarLattice scaled = PlanarLattice::from_gram({f * l.gram.g11, f * l.gram.g12, f * l.gram.g22});
      CHECK(classify(scaled) == classify(l));
    }
  }
}

TEST_CASE("sublattice Gram") {
  const PlanarLattice sq = PlanarLattice::square();
  const GramMatrix2 g = sublattice_gram(sq, IntMatrix2{2, 1, 0, 5});
  CHECK(g == GramMatrix2{QuadValue(5), QuadValue(5), QuadValue(25)});
  CHECK_THROWS_AS(sublattice_gram(sq, IntMatrix2{1, 2, 2, 4}), std::invalid_argument);
}

TEST_CASE("integral form") {
  const auto tri = integral_form(PlanarLattice::triangle().gram);
  REQUIRE(tri);
  CHECK(tri->g11 == 2);
  CHECK(tri->g12 == 1);
  CHECK(tri->g22 == 2);
  const auto scaled = integral_form(parse_gram("2*sqrt(2),1*sqrt(2),2*sqrt(2)", 2));
  REQUIRE(scaled);
  CHECK(scaled->g11 == 2);
  const auto frac = integral_form(parse_gram("1/2,1/3,1"));
  REQUIRE(frac);
  CHECK(frac->g11 == 3);
  CHECK(frac->g12 == 2);
  CHECK(frac->g22 == 6);
  CHECK_FALSE(integral_form(parse_gram("1,0,sqrt(2)", 2)));
}

TEST_CASE("random rational lattices are reproducible") {
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 20; ++i) CHECK(random_rational_lattice(a).gram == random_rational_lattice(b).gram);
}
