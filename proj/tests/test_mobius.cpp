#include <doctest.h>

#include "generators.hpp"
#include "hypesi/mobius.hpp"
#include "oracles.hpp"

using namespace hypesi;

namespace {

oracle::C c(const Complex& z) { return oracle::to_c(z); }

}  // namespace

TEST_CASE("from_entries normalizes the determinant") {
  const MobiusMap m = MobiusMap::from_entries(Complex(2), Complex(3), Complex(1), Complex(5));
  CHECK(m.determinant_defect() < Real(1e-30));
  CHECK_THROWS_AS(MobiusMap::from_entries(Complex(1), Complex(2), Complex(2), Complex(4)),
                  GeometryError);
}

TEST_CASE("boundary point at infinity") {
  const BoundaryPoint inf = BoundaryPoint::infinity();
  CHECK(inf.is_infinite());
  CHECK_THROWS_AS(inf.value(), GeometryError);
  CHECK(chordal_distance(inf, BoundaryPoint(0.0)) == Real(2));
  const MobiusMap m = MobiusMap::from_entries(Complex(1), Complex(2), Complex(1), Complex(3));
  CHECK(chordal_distance(apply(m, inf), BoundaryPoint(1.0)) < Real(1e-30));
  CHECK(apply(m, BoundaryPoint(-3.0)).is_infinite());
}

TEST_CASE("classification of basic maps") {
  CHECK(classify(MobiusMap()) == IsometryClass::identity);
  CHECK(classify(-MobiusMap()) == IsometryClass::identity);
  CHECK(classify(MobiusMap::from_entries(Complex(1), Complex(1), Complex(0), Complex(1))) ==
        IsometryClass::parabolic);
  CHECK(classify(MobiusMap::diagonal(Complex(Real(0.6), Real(0.8)))) == IsometryClass::elliptic);
  CHECK(classify(MobiusMap::diagonal(Complex(2))) == IsometryClass::hyperbolic);
  CHECK(classify(MobiusMap::diagonal(Complex(Real(1.2), Real(1.6)))) ==
        IsometryClass::loxodromic_nonreal);
  CHECK(std::string(to_string(IsometryClass::loxodromic_nonreal)) == "loxodromic-nonreal");
}

TEST_CASE("half-turns have trace zero") {
  const MobiusMap h = MobiusMap::from_entries(Complex(0), Complex(1), Complex(-1), Complex(0));
  CHECK(is_half_turn(h));
  CHECK(is_plus_minus_identity(h * h));
  CHECK_FALSE(is_half_turn(MobiusMap::diagonal(Complex(2))));
}

TEST_CASE("oriented fixed points and translation length of diag(2, 1/2)") {
  const MobiusMap a = MobiusMap::diagonal(Complex(2));
  const OrientedFixedPoints f = oriented_fixed_points(a);
  CHECK(f.attracting.is_infinite());
  CHECK(modulus(f.repelling.value()) < Real(1e-30));
  CHECK(fabs(translation_length(a) - 2 * log(Real(2))) < Real(1e-30));
  CHECK_THROWS_AS(oriented_fixed_points(MobiusMap::from_entries(Complex(1), Complex(1), Complex(0),
                                                                Complex(1))),
                  GeometryError);
}

TEST_CASE("property: group laws") {
  gen::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const MobiusMap x = gen::sl2c(rng), y = gen::sl2c(rng), z = gen::sl2c(rng);
    CHECK(isometry_distance((x * y) * z, x * (y * z)) < Real(1e-28));
    CHECK(is_plus_minus_identity(x * inverse(x)));
    CHECK(same_isometry(conjugate(x * y, z), conjugate(x, z) * conjugate(y, z), Real(1e-28)));
    CHECK(isometry_distance(x, -x) == Real(0));
  }
}

TEST_CASE("property: Poincare extension agrees with the quaternion formula") {
  gen::Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    const MobiusMap m = gen::sl2c(rng);
    const SpacePoint p = gen::space_point(rng);
    const SpacePoint q = apply(m, p);
    const auto [z, t] = oracle::act(c(m.a()), c(m.b()), c(m.c()), c(m.d()), c(p.z), to_double(p.t));
    CHECK(std::abs(c(q.z) - z) <= 1e-9 * std::max(1.0, std::abs(z)));
    CHECK(std::abs(to_double(q.t) - t) <= 1e-9 * std::max(1.0, t));
  }
}

TEST_CASE("property: distance matches the cosh formula and is invariant") {
  gen::Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    const SpacePoint p = gen::space_point(rng), q = gen::space_point(rng);
    const double d = to_double(hyperbolic_distance(p, q));
    CHECK(d == doctest::Approx(oracle::distance(c(p.z), to_double(p.t), c(q.z), to_double(q.t)))
                   .epsilon(1e-9));
    const MobiusMap m = gen::sl2c(rng);
    CHECK(fabs(hyperbolic_distance(apply(m, p), apply(m, q)) - hyperbolic_distance(p, q)) <
          Real(1e-25));
  }
}

TEST_CASE("property: fixed points match the quadratic formula") {
  gen::Rng rng(14);
  for (int i = 0; i < 300; ++i) {
    const MobiusMap m = gen::loxodromic(rng);
    const auto [r1, r2] = oracle::fixed_points(c(m.a()), c(m.b()), c(m.c()), c(m.d()));
    const OrientedFixedPoints f = oriented_fixed_points(m);
    const oracle::C att = c(f.attracting.value()), rep = c(f.repelling.value());
    const bool direct = std::abs(att - r1) < 1e-8 * std::max(1.0, std::abs(r1)) &&
                        std::abs(rep - r2) < 1e-8 * std::max(1.0, std::abs(r2));
    const bool swapped = std::abs(att - r2) < 1e-8 * std::max(1.0, std::abs(r2)) &&
                         std::abs(rep - r1) < 1e-8 * std::max(1.0, std::abs(r1));
    CHECK((direct || swapped));
    // Attracting means |m'(z)| = |cz + d|^-2 < 1 there.
    const oracle::C ca = c(m.c()), cd = c(m.d());
    CHECK(std::abs(ca * att + cd) > 1.0);
    CHECK(std::abs(ca * rep + cd) < 1.0);
  }
}

TEST_CASE("property: translation length is the displacement along the axis") {
  gen::Rng rng(15);
  for (int i = 0; i < 200; ++i) {
    const MobiusMap m = gen::loxodromic(rng);
    const OrientedFixedPoints f = oriented_fixed_points(m);
    // A point on the axis: the top of the semicircle over the two fixed points.
    const Complex u = f.repelling.value(), v = f.attracting.value();
    const SpacePoint p{(u + v) / Real(2), modulus(u - v) / 2};
    CHECK(fabs(hyperbolic_distance(p, apply(m, p)) - translation_length(m)) < Real(1e-20));
  }
}
