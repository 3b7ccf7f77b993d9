#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "wrl/sublattice.hpp"

using namespace wrl;

namespace {

/// Well-roundedness of an integral form from a box scan of short vectors,
/// with no reduction involved.
bool box_well_rounded(std::int64_t a, std::int64_t b, std::int64_t c) {
  auto q = [&](std::int64_t x, std::int64_t y) { return a * x * x + 2 * b * x * y + c * y * y; };
  // Successive minima vectors of a form with det D and λ1 ≤ sqrt(4D/3) have
  // coordinates bounded by λ2·sqrt(max(a, c)/D); a generous fixed box suffices here.
  const int r = 40;
  std::int64_t l1 = -1, x1 = 0, y1 = 0;
  for (int x = -r; x <= r; ++x)
    for (int y = -r; y <= r; ++y)
      if ((x || y) && (l1 < 0 || q(x, y) < l1)) l1 = q(x, y), x1 = x, y1 = y;
  for (int x = -r; x <= r; ++x)
    for (int y = -r; y <= r; ++y)
      if (x * y1 - y * x1 != 0 && q(x, y) == l1) return true;
  return false;
}

}  // namespace

TEST_CASE("HNF enumeration") {
  CHECK(enumerate_hnf(1).size() == 1);
  CHECK(enumerate_hnf(6).size() == 12);
  for (std::int64_t n = 1; n <= 1500; ++n) {
    const auto subs = enumerate_hnf(n);
    REQUIRE(static_cast<std::int64_t>(subs.size()) == sigma(n));
    for (const auto& h : subs) {
      CHECK(h.index() == n);
      CHECK(h.b >= 0);
      CHECK(h.b < h.d);
    }
  }
  CHECK_THROWS_AS(enumerate_hnf(0), std::invalid_argument);
}

TEST_CASE("HNF representatives are distinct lattices") {
  // (a', b') lies in L(a, b, d) iff a | a' and d | (b' − (a'/a)·b).
  auto contains = [](const SublatticeHNF& l, std::int64_t x, std::int64_t y) {
    if (x % l.a != 0) return false;
    const std::int64_t r = y - (x / l.a) * l.b;
    return ((r % l.d) + l.d) % l.d == 0;
  };
  for (std::int64_t n = 1; n <= 36; ++n) {
    const auto subs = enumerate_hnf(n);
    for (std::size_t i = 0; i < subs.size(); ++i)
      for (std::size_t j = i + 1; j < subs.size(); ++j) {
        const auto& s = subs[j];
        const bool same = contains(subs[i], s.a, s.b) && contains(subs[i], 0, s.d);
        CHECK_FALSE(same);
      }
  }
}

TEST_CASE("sigma") {
  CHECK(sigma(1) == 1);
  CHECK(sigma(12) == 28);
  CHECK(sigma(97) == 98);
  CHECK(sigma(10000) == 24211);
}

TEST_CASE("square lattice WR counts") {
  const CountTable t = count_table(PlanarLattice::square(), 2, ShapePredicate::well_rounded());
  CHECK(t[1] == 1);
  CHECK(t[2] == 1);
  const CountTable big = count_table(PlanarLattice::square(), 60, ShapePredicate::well_rounded());
  for (std::int64_t n = 1; n <= 60; ++n) {
    std::int64_t expected = 0;
    for (const auto& h : enumerate_hnf(n))
      if (box_well_rounded(h.a * h.a + h.b * h.b, h.b * h.d, h.d * h.d)) ++expected;
    CHECK_MESSAGE(big[n] == expected, "n = " << n);
  }
}

TEST_CASE("triangle lattice WR counts against box scan") {
  const CountTable t = count_table(PlanarLattice::triangle(), 40, ShapePredicate::well_rounded());
  for (std::int64_t n = 1; n <= 40; ++n) {
    std::int64_t expected = 0;
    for (const auto& h : enumerate_hnf(n)) {
      // rows (a, b), (0, d) against [[2,1],[1,2]]
      const std::int64_t g11 = 2 * h.a * h.a + 2 * h.a * h.b + 2 * h.b * h.b;
      const std::int64_t g12 = h.a * h.d + 2 * h.b * h.d;
      const std::int64_t g22 = 2 * h.d * h.d;
      if (box_well_rounded(g11, g12, g22)) ++expected;
    }
    CHECK_MESSAGE(t[n] == expected, "n = " << n);
  }
}

TEST_CASE("square lattice has no hexagonal sublattices") {
  const CountTable t = count_table(PlanarLattice::square(), 500, ShapePredicate::shape(ShapeClass::Hexagonal));
  for (std::int64_t n = 1; n <= 500; ++n) CHECK(t[n] == 0);
}

TEST_CASE("counts do not depend on worker count") {
  const auto lattice = PlanarLattice::from_gram(parse_gram("2,1/3,3"));
  const auto one = count_table(lattice, 300, ShapePredicate::well_rounded(), 1);
  const auto three = count_table(lattice, 300, ShapePredicate::well_rounded(), 3);
  CHECK(one.counts == three.counts);
}

TEST_CASE("minimal-pair counter equals HNF brute force") {
  struct Case {
    const char* gram;
    std::optional<std::int64_t> radicand;
    std::int64_t n;
  };
  const std::vector<Case> cases = {
      {"1,0,1", {}, 1500},          {"2,1,2", {}, 1500},           {"1,0,sqrt(2)", 2, 1500},
      {"1,1/3*sqrt(2),2", 2, 600},  {"2,1+1*sqrt(3),5", 3, 400},   {"1,0,2", {}, 800},
      {"3,1,3", {}, 800},           {"5/2,-2/3,4", {}, 400},
  };
  for (const Case& c : cases) {
    const auto lattice = PlanarLattice::from_gram(parse_gram(c.gram, c.radicand));
    const auto fast = count_wr_by_minimal_pairs(lattice, c.n);
    const auto brute = count_table(lattice, c.n, ShapePredicate::well_rounded());
    CHECK_MESSAGE(fast.counts == brute.counts, c.gram);
  }
  std::mt19937_64 rng(8);
  for (int i = 0; i < 10; ++i) {
    const PlanarLattice l = random_rational_lattice(rng);
    CHECK_MESSAGE(count_wr_by_minimal_pairs(l, 200).counts ==
                      count_table(l, 200, ShapePredicate::well_rounded()).counts,
                  to_string(l.gram));
  }
}

TEST_CASE("predicates") {
  const auto sq = PlanarLattice::square();
  CHECK(ShapePredicate::similar_to(sq).accepts(ShapeClass::Square));
  CHECK_FALSE(ShapePredicate::similar_to(sq).accepts(ShapeClass::RhombicWR));
  CHECK(ShapePredicate::any_of({ShapeClass::Oblique}).accepts(ShapeClass::Oblique));
  CHECK_FALSE(ShapePredicate::never().accepts(ShapeClass::Square));
  // Every sublattice has exactly one shape.
  std::int64_t total = 0;
  for (ShapeClass s : {ShapeClass::Square, ShapeClass::Hexagonal, ShapeClass::RhombicWR, ShapeClass::RhombicNonWR,
                       ShapeClass::Rectangular, ShapeClass::Oblique})
    total += count_by_shape(sq, 60, ShapePredicate::shape(s));
  CHECK(total == sigma(60));
}

TEST_CASE("summatory function") {
  CountTable t{"ones", std::vector<std::int64_t>(101, 1)};
  SummatoryModel linear{"x", [](long double x) { return x; }, [](long double) { return 1.0L; }};
  const auto r = summatory(t, {1, 10, 100}, linear);
  CHECK(r.cumulative == std::vector<std::int64_t>{1, 10, 100});
  for (long double v : r.residual) CHECK(v == doctest::Approx(0));
  const auto grid = log_grid(10, 1000, 5);
  CHECK(grid.front() == 10);
  CHECK(grid.back() == 1000);
  CHECK(std::is_sorted(grid.begin(), grid.end()));
}

TEST_CASE("sublattice witness") {
  const auto sq = PlanarLattice::square();
  const auto w = find_sublattice_witness(sq, 10, {ShapeClass::Square});
  REQUIRE(w);
  CHECK(w->index == 1);
  const auto oblique = PlanarLattice::from_gram(parse_gram("2,1/3,3"));
  const auto wr = find_sublattice_witness(oblique, 200, {ShapeClass::Square, ShapeClass::Hexagonal, ShapeClass::RhombicWR});
  REQUIRE(wr);
  const GramMatrix2 g = sublattice_gram(oblique, wr->reduced_basis);
  CHECK(g.g11 == g.g22);
  CHECK(wr->reduced_basis.det() * wr->reduced_basis.det() == BigInt(wr->index) * wr->index);
  CHECK_FALSE(find_sublattice_witness(sq, 50, {ShapeClass::Hexagonal}));
}
