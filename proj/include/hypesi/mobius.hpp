#pragma once

#include <array>
#include <vector>

#include "hypesi/scalar.hpp"

namespace hypesi {

/// A point of the Riemann sphere: a finite complex number or infinity.
class BoundaryPoint {
 public:
  BoundaryPoint() = default;
  BoundaryPoint(const Complex& z) : value_(z) {}  // NOLINT: implicit by intent
  BoundaryPoint(const Real& x) : value_(x, 0) {}  // NOLINT
  BoundaryPoint(double x) : value_(Real(x), 0) {}  // NOLINT

  static BoundaryPoint infinity() {
    BoundaryPoint p;
    p.infinite_ = true;
    return p;
  }

  bool is_infinite() const { return infinite_; }
  /// Finite value; throws GeometryError on infinity.
  const Complex& value() const;

  bool is_real(const Real& tol) const;

 private:
  bool infinite_ = false;
  Complex value_{0, 0};
};

/// Chordal distance on the unit sphere (range [0, 2]).
Real chordal_distance(const BoundaryPoint& p, const BoundaryPoint& q);

/// A point of upper half-space H^3 (z, t) with t > 0. The upper half-plane
/// model of H^2 is the slice z real.
struct SpacePoint {
  Complex z;
  Real t;
};

/// Hyperbolic distance in upper half-space.
Real hyperbolic_distance(const SpacePoint& p, const SpacePoint& q);

enum class IsometryClass { identity, parabolic, elliptic, hyperbolic, loxodromic_nonreal };

const char* to_string(IsometryClass c);

/// Orientation-preserving isometry of H^3 as a determinant-one complex matrix
/// (a b; c d). Matrices are only meaningful up to global sign.
class MobiusMap {
 public:
  /// Identity.
  MobiusMap();

  /// Divides by a square root of the determinant; throws on a singular matrix.
  static MobiusMap from_entries(const Complex& a, const Complex& b, const Complex& c,
                                const Complex& d);
  static MobiusMap identity() { return MobiusMap(); }
  /// diag(lambda, 1/lambda).
  static MobiusMap diagonal(const Complex& lambda);

  const Complex& a() const { return m_[0]; }
  const Complex& b() const { return m_[1]; }
  const Complex& c() const { return m_[2]; }
  const Complex& d() const { return m_[3]; }

  Complex trace() const { return m_[0] + m_[3]; }
  Complex determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  /// Largest entry modulus; the scale against which rounding is judged.
  Real scale() const;
  /// |det - 1| relative to the size of the products forming it.
  Real determinant_defect() const;
  /// True when every entry is real up to a tolerance relative to scale().
  bool is_real(const Real& tol) const;

  MobiusMap operator-() const;

 private:
  explicit MobiusMap(const std::array<Complex, 4>& m) : m_(m) {}
  friend MobiusMap compose(const MobiusMap&, const MobiusMap&);
  friend MobiusMap inverse(const MobiusMap&);

  std::array<Complex, 4> m_;
};

/// Matrix product m1 * m2, i.e. the map z -> m1(m2(z)). The product of
/// normalized matrices is normalized in exact arithmetic; it is not divided
/// again because for long words the computed determinant is dominated by
/// cancellation error.
MobiusMap compose(const MobiusMap& m1, const MobiusMap& m2);
inline MobiusMap operator*(const MobiusMap& m1, const MobiusMap& m2) { return compose(m1, m2); }

/// Adjugate (d, -b; -c, a).
MobiusMap inverse(const MobiusMap& m);

/// w * m * w^-1.
MobiusMap conjugate(const MobiusMap& m, const MobiusMap& w);

BoundaryPoint apply(const MobiusMap& m, const BoundaryPoint& z);
/// Poincare extension to upper half-space.
SpacePoint apply(const MobiusMap& m, const SpacePoint& p);

/// Equality of isometries: matrices agree up to global sign, relative to scale.
bool same_isometry(const MobiusMap& m1, const MobiusMap& m2, const Real& tol);
/// Relative distance min(|m1 - m2|, |m1 + m2|) / max(1, scale).
Real isometry_distance(const MobiusMap& m1, const MobiusMap& m2);

bool is_plus_minus_identity(const MobiusMap& m);

IsometryClass classify(const MobiusMap& m);

/// Fixed points on the sphere: one for parabolics, two otherwise.
std::vector<BoundaryPoint> fixed_points(const MobiusMap& m);

/// Fixed points of a non-parabolic map labelled by dynamics. For elliptic maps
/// the labels are arbitrary but stable.
struct OrientedFixedPoints {
  BoundaryPoint repelling;
  BoundaryPoint attracting;
  /// Eigenvalue at the attracting point, |multiplier| >= 1.
  Complex multiplier;
};

OrientedFixedPoints oriented_fixed_points(const MobiusMap& m);

/// Translation length 2 log|multiplier| (zero for elliptics).
Real translation_length(const MobiusMap& m);

bool is_half_turn(const MobiusMap& m);

}  // namespace hypesi
