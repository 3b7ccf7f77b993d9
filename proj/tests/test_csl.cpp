#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wrl/csl.hpp"

using namespace wrl;

namespace {

/// Index of {x ∈ Z² : S·x ∈ Z²} by counting residues x mod q with (q·S)·x ≡ 0.
std::int64_t residue_index(const RationalMatrix2& s) {
  BigInt q = 1;
  for (const Rational* e : {&s.m11, &s.m12, &s.m21, &s.m22}) q = mp::lcm(q, denominator_of(*e));
  const std::int64_t qq = to_int64(q);
  auto scaled = [&](const Rational& e) { return to_int64(numerator_of(e * Rational(q))); };
  const std::int64_t a = scaled(s.m11), b = scaled(s.m12), c = scaled(s.m21), d = scaled(s.m22);
  std::int64_t solutions = 0;
  for (std::int64_t x = 0; x < qq; ++x)
    for (std::int64_t y = 0; y < qq; ++y)
      if ((a * x + b * y) % qq == 0 && (c * x + d * y) % qq == 0) ++solutions;
  return qq * qq / solutions;
}

RationalMatrix2 gram_rational(const PlanarLattice& l) {
  return {l.gram.g11.rational_part(), l.gram.g12.rational_part(), l.gram.g12.rational_part(),
          l.gram.g22.rational_part()};
}

RationalMatrix2 transpose(const RationalMatrix2& m) { return {m.m11, m.m21, m.m12, m.m22}; }

}  // namespace

TEST_CASE("square lattice (2,1) reflection") {
  const auto s = reflection_matrix(PlanarLattice::square(), {2, 1});
  REQUIRE(s);
  CHECK(*s == RationalMatrix2{Rational(3, 5), Rational(4, 5), Rational(4, 5), Rational(-3, 5)});
  CHECK(csl_index(*s) == 5);
  CHECK(residue_index(*s) == 5);
}

TEST_CASE("reflection invariants and residue oracle") {
  for (const PlanarLattice& l : {PlanarLattice::square(), PlanarLattice::triangle(),
                                 PlanarLattice::from_gram(parse_gram("2,1/3,3"))}) {
    const RationalMatrix2 g = gram_rational(l);
    const ReflectionScan scan = coincidence_reflections(l, 12);
    CHECK(scan.all_rational);
    for (const auto& r : scan.reflections) {
      const RationalMatrix2& s = r.matrix;
      CHECK(s * s == RationalMatrix2::identity());
      CHECK(s.det() == -1);
      CHECK(transpose(s) * g * s == g);
      CHECK(s.m11 * r.axis[0] + s.m12 * r.axis[1] == r.axis[0]);
      CHECK(s.m21 * r.axis[0] + s.m22 * r.axis[1] == r.axis[1]);
      CHECK(r.sigma == residue_index(s));
      CHECK(r.axis[0] >= 0);
    }
  }
}

TEST_CASE("square lattice indices are odd") {
  const ReflectionScan scan = coincidence_reflections(PlanarLattice::square(), 20);
  CHECK(scan.reflections.size() > 100);
  for (const auto& r : scan.reflections) CHECK(r.sigma % 2 == 1);
}

TEST_CASE("scan order and deduplication") {
  const ReflectionScan scan = coincidence_reflections(PlanarLattice::square(), 2);
  REQUIRE(scan.reflections.size() >= 4);
  CHECK(scan.reflections[0].axis == Axis{0, 1});
  CHECK(scan.reflections[1].axis == Axis{1, -1});
  CHECK(scan.reflections[2].axis == Axis{1, 0});
  CHECK(scan.reflections[3].axis == Axis{1, 1});
  for (std::size_t i = 0; i < scan.reflections.size(); ++i)
    for (std::size_t j = i + 1; j < scan.reflections.size(); ++j)
      CHECK_FALSE(scan.reflections[i].matrix == scan.reflections[j].matrix);
}

TEST_CASE("two reflections for diag(1, sqrt m)") {
  for (std::int64_t m : {2, 3, 5, 7}) {
    const auto l = PlanarLattice::from_gram(parse_gram("1,0,sqrt(" + std::to_string(m) + ")", m));
    const ReflectionScan scan = coincidence_reflections(l, 10);
    CHECK_FALSE(scan.all_rational);
    REQUIRE(scan.reflections.size() == 2);
    for (const auto& r : scan.reflections) CHECK(r.sigma == 1);
  }
}

TEST_CASE("irrational oblique lattices have no coincidence reflections") {
  for (const char* g : {"1,1/3*sqrt(2),2", "1,1/2*sqrt(3),3", "2,1/3*sqrt(5),5", "1,1/4*sqrt(7),3"}) {
    const std::string text(g);
    const std::int64_t m = text[text.find("sqrt(") + 5] - '0';
    const auto l = PlanarLattice::from_gram(parse_gram(text, m));
    CHECK(coincidence_reflections(l, 15).reflections.empty());
    CHECK_FALSE(reflection_matrix(l, {1, 1}));
  }
}

TEST_CASE("axis validation") {
  const auto sq = PlanarLattice::square();
  CHECK_THROWS_AS(reflection_matrix(sq, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(reflection_matrix(sq, {2, 4}), std::invalid_argument);
  CHECK(primitive_axis(-4, 6) == Axis{2, -3});
  CHECK(primitive_axis(0, -5) == Axis{0, 1});
  CHECK(gcd_abs(-12, 18) == 6);
  CHECK_THROWS(csl_index(RationalMatrix2{1, 1, 0, 1}));
}

TEST_CASE("harness verdicts") {
  const HarnessReport sq = theorem1_harness(PlanarLattice::square(), 5, 20);
  CHECK(sq.verdict == Verdict::Consistent);
  CHECK(sq.wr_witness);
  CHECK_FALSE(sq.scan.reflections.empty());

  const auto oblique = PlanarLattice::from_gram(parse_gram("1,1/3*sqrt(2),2", 2));
  const HarnessReport ob = theorem1_harness(oblique, 10, 150);
  CHECK(ob.verdict == Verdict::Consistent);
  CHECK_FALSE(ob.wr_witness);
  CHECK(ob.scan.reflections.empty());

  const auto rect = PlanarLattice::from_gram(parse_gram("1,0,sqrt(2)", 2));
  const HarnessReport r = theorem1_harness(rect, 10, 50);
  CHECK(r.verdict == Verdict::Consistent);
  CHECK(r.wr_witness);
  CHECK(r.witness_mirror);
  CHECK(std::string(to_string(Verdict::Inconclusive)) == "INCONCLUSIVE");
}
