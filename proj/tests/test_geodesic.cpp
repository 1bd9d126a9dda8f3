#include <doctest.h>

#include "generators.hpp"
#include "hypesi/geodesic.hpp"
#include "oracles.hpp"

using namespace hypesi;

namespace {

oracle::C c(const BoundaryPoint& p) { return oracle::to_c(p.value()); }

Geodesic real_line(double u, double v) { return Geodesic(BoundaryPoint(u), BoundaryPoint(v)); }

// Unit tangent of the oriented real geodesic g at a point z on it.
oracle::C tangent(const Geodesic& g, oracle::C z) {
  if (g.e1().is_infinite()) return {0, -1};
  if (g.e2().is_infinite()) return {0, 1};
  const double u = to_double(g.e1().value().real()), v = to_double(g.e2().value().real());
  const oracle::C m((u + v) / 2, 0);
  const oracle::C t = (u < v ? oracle::C(0, -1) : oracle::C(0, 1)) * (z - m);
  return t / std::abs(t);
}

}  // namespace

TEST_CASE("degenerate geodesics are rejected") {
  CHECK_THROWS_AS(Geodesic(BoundaryPoint(1.0), BoundaryPoint(1.0)), GeometryError);
  CHECK_NOTHROW(Geodesic(BoundaryPoint(1.0), BoundaryPoint::infinity()));
}

TEST_CASE("canonical map of real geodesics preserves the upper half-plane") {
  for (const auto& g : {real_line(-1, 3), real_line(3, -1), real_line(0.5, 2)}) {
    const MobiusMap m = canonical_map(g);
    CHECK(m.is_real(Real(1e-30)));
    CHECK(apply(m, BoundaryPoint(Complex(0, 1))).value().imag() > 0);
  }
  const MobiusMap m = canonical_map(Geodesic(BoundaryPoint::infinity(), BoundaryPoint(2.0)));
  CHECK(modulus(apply(m, BoundaryPoint::infinity()).value()) < Real(1e-30));
  CHECK(apply(m, BoundaryPoint(2.0)).is_infinite());
}

TEST_CASE("crossing of (-1, 1) and (0, inf)") {
  const Geodesic g1 = real_line(-1, 1);
  const Geodesic g2 = Geodesic(BoundaryPoint(0.0), BoundaryPoint::infinity());
  CHECK(crosses_h2(g1, g2));
  const PlanePoint p = intersection_point_h2(g1, g2);
  CHECK(modulus(p.z - Complex(0, 1)) < Real(1e-30));
  CHECK(fabs(angle_at_intersection_h2(g1, g2) - kPi / 2) < Real(1e-30));
  CHECK(perpendicularity_residual(g1, g2) < Real(1e-30));
  CHECK_FALSE(crosses_h2(real_line(1, 2), real_line(3, 4)));
  CHECK_THROWS_AS(intersection_point_h2(real_line(1, 2), real_line(3, 4)), GeometryError);
  CHECK(perpendicularity_residual(g2, real_line(1, 2)) > Real(0.1));
}

TEST_CASE("cross ratio convention") {
  const Complex cr = cross_ratio(BoundaryPoint(0.0), BoundaryPoint(2.0), BoundaryPoint(1.0),
                                 BoundaryPoint::infinity());
  CHECK(modulus(cr + Complex(1)) < Real(1e-30));
  CHECK_THROWS_AS(cross_ratio(BoundaryPoint(0.0), BoundaryPoint(0.0), BoundaryPoint(1.0),
                              BoundaryPoint(2.0)),
                  GeometryError);
}

TEST_CASE("axis of a parabolic is undefined") {
  CHECK_THROWS_WITH(axis_of(MobiusMap::from_entries(Complex(1), Complex(1), Complex(0), Complex(1))),
                    "axis undefined (parabolic)");
}

TEST_CASE("common perpendicular of asymptotic geodesics is undefined") {
  CHECK_THROWS_WITH(common_perpendicular(real_line(0, 1), real_line(1, 5)),
                    "perpendicular undefined (parallel/asymptotic)");
}

TEST_CASE("property: half-turns fix their geodesic pointwise") {
  gen::Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const Geodesic g = gen::geodesic(rng);
    const MobiusMap h = half_turn_about(g);
    CHECK(is_half_turn(h));
    CHECK(is_plus_minus_identity(h * h));
    CHECK(chordal_distance(apply(h, g.e1()), g.e1()) < Real(1e-28));
    CHECK(chordal_distance(apply(h, g.e2()), g.e2()) < Real(1e-28));
    const AxisCoordinate coord(g);
    const SpacePoint p = coord.point(Real(rng.uniform(-2, 2)));
    CHECK(hyperbolic_distance(apply(h, p), p) < Real(1e-25));
    // Off the geodesic, h moves a point by twice its distance to g.
    const SpacePoint q = gen::space_point(rng);
    CHECK(fabs(hyperbolic_distance(apply(h, q), q) - 2 * point_geodesic_distance(q, g)) <
          Real(1e-20));
  }
}

TEST_CASE("property: common perpendicular is harmonic with both geodesics") {
  gen::Rng rng(22);
  for (int i = 0; i < 300; ++i) {
    const Geodesic g1 = gen::geodesic(rng), g2 = gen::geodesic(rng);
    if (geodesic_distance(g1, g2) < Real(0.05)) continue;
    const Geodesic o = common_perpendicular(g1, g2);
    CHECK(oracle::harmonic_defect(c(o.e1()), c(o.e2()), c(g1.e1()), c(g1.e2())) < 1e-8);
    CHECK(oracle::harmonic_defect(c(o.e1()), c(o.e2()), c(g2.e1()), c(g2.e2())) < 1e-8);
    CHECK(perpendicularity_residual(o, g1) < Real(1e-25));
    CHECK(perpendicularity_residual(g2, o) < Real(1e-25));
  }
}

TEST_CASE("property: planar crossings lie on both arcs at the oracle angle") {
  gen::Rng rng(23);
  int crossings = 0;
  for (int i = 0; i < 400; ++i) {
    const Geodesic g1 = gen::real_geodesic(rng), g2 = gen::real_geodesic(rng);
    if (!crosses_h2(g1, g2)) continue;
    ++crossings;
    const oracle::C z = oracle::to_c(intersection_point_h2(g1, g2).z);
    for (const Geodesic* g : {&g1, &g2}) {
      const double u = to_double(g->e1().value().real()), v = to_double(g->e2().value().real());
      CHECK(std::abs(std::abs(z - oracle::C((u + v) / 2, 0)) - std::abs(v - u) / 2) < 1e-12);
    }
    const oracle::C t1 = tangent(g1, z), t2 = tangent(g2, z);
    const double expect = std::acos(std::clamp(std::real(t1 * std::conj(t2)), -1.0, 1.0));
    CHECK(to_double(angle_at_intersection_h2(g1, g2)) == doctest::Approx(expect).epsilon(1e-9));
    CHECK(fabs(AxisCoordinate(g1).at(intersection_point_h2(g1, g2)) - AxisCoordinate(g1).at(g2)) <
          Real(1e-25));
  }
  CHECK(crossings > 50);
}

TEST_CASE("property: cross ratio is Mobius invariant") {
  gen::Rng rng(24);
  for (int i = 0; i < 200; ++i) {
    BoundaryPoint p[4];
    for (auto& x : p) x = gen::boundary_point(rng);
    const MobiusMap m = gen::sl2c(rng);
    const Complex before = cross_ratio(p[0], p[1], p[2], p[3]);
    const Complex after = cross_ratio(apply(m, p[0]), apply(m, p[1]), apply(m, p[2]), apply(m, p[3]));
    CHECK(modulus(before - after) < Real(1e-20) * std::max(Real(1), modulus(before)));
  }
}

TEST_CASE("property: axis coordinate is arclength") {
  gen::Rng rng(25);
  for (int i = 0; i < 200; ++i) {
    const Geodesic g = gen::geodesic(rng);
    const AxisCoordinate coord(g);
    const Real s1(rng.uniform(-3, 3)), s2(rng.uniform(-3, 3));
    CHECK(fabs(coord.at(coord.point(s1)) - s1) < Real(1e-25));
    CHECK(fabs(hyperbolic_distance(coord.point(s1), coord.point(s2)) - fabs(s1 - s2)) < Real(1e-25));
    CHECK(point_geodesic_distance(coord.point(s1), g) < Real(1e-15));
  }
}

TEST_CASE("property: images of geodesics") {
  gen::Rng rng(26);
  for (int i = 0; i < 200; ++i) {
    const Geodesic g = gen::geodesic(rng);
    const MobiusMap m = gen::sl2c(rng);
    const Geodesic img = image(m, g);
    CHECK(chordal_distance(img.e1(), apply(m, g.e1())) == Real(0));
    CHECK(same_geodesic(img.reversed(), img, Real(0)));
    CHECK(same_geodesic(image(inverse(m), img), g, Real(1e-25)));
    // Conjugating the half-turn moves it to the image geodesic.
    CHECK(same_isometry(conjugate(half_turn_about(g), m), half_turn_about(img), Real(1e-25)));
  }
}
