#pragma once

#include <utility>

#include "hypesi/mobius.hpp"

namespace hypesi {

/// Geodesic of H^3 given by its two endpoints on the sphere. The endpoint
/// order carries an orientation (e1 -> e2) used for axes and angles; equality
/// ignores it.
class Geodesic {
 public:
  /// Throws GeometryError when the endpoints coincide (chordal distance at or
  /// below tolerances().degenerate).
  Geodesic(const BoundaryPoint& e1, const BoundaryPoint& e2);

  const BoundaryPoint& e1() const { return e1_; }
  const BoundaryPoint& e2() const { return e2_; }
  Geodesic reversed() const { return Geodesic(e2_, e1_); }

  /// Both endpoints on the extended real line.
  bool is_real(const Real& tol) const;

 private:
  BoundaryPoint e1_;
  BoundaryPoint e2_;
};

/// Point of the upper half-plane model of H^2.
struct PlanePoint {
  Complex z;
};

/// Distance between endpoint sets: the better of the two matchings, measured by
/// the larger chordal distance.
Real geodesic_distance(const Geodesic& g1, const Geodesic& g2);
bool same_geodesic(const Geodesic& g1, const Geodesic& g2, const Real& tol);

Geodesic image(const MobiusMap& m, const Geodesic& g);

/// Normalized map sending e1 -> 0 and e2 -> infinity. For real endpoints the
/// matrix is real with positive determinant, so it preserves the upper
/// half-plane.
MobiusMap canonical_map(const Geodesic& g);

MobiusMap half_turn_about(const Geodesic& g);
/// Axis oriented from the repelling to the attracting fixed point.
Geodesic axis_of(const MobiusMap& m);
Geodesic common_perpendicular(const Geodesic& g1, const Geodesic& g2);

/// Zero exactly when g1 and g2 meet at a right angle. Measured after moving g1
/// to (0, inf) and g2 to a curve with |e1 e2| = 1, so the value does not
/// depend on where in the sphere the pair sits.
Real perpendicularity_residual(const Geodesic& g1, const Geodesic& g2);

/// Real geodesics whose endpoints separate each other (they cross in H^2).
bool crosses_h2(const Geodesic& g1, const Geodesic& g2);
PlanePoint intersection_point_h2(const Geodesic& g1, const Geodesic& g2);
/// Angle in (0, pi) between the oriented tangents at the crossing.
Real angle_at_intersection_h2(const Geodesic& g1, const Geodesic& g2);

/// (a-c)(b-d) / ((a-d)(b-c)); factors containing infinity are dropped.
Complex cross_ratio(const BoundaryPoint& a, const BoundaryPoint& b, const BoundaryPoint& c,
                    const BoundaryPoint& d);

/// Signed arclength coordinate along an oriented geodesic. Points, and
/// geodesics orthogonal to the axis, are located by their projection.
class AxisCoordinate {
 public:
  explicit AxisCoordinate(const Geodesic& axis);

  const Geodesic& axis() const { return axis_; }
  /// Foot of the perpendicular from p.
  Real at(const SpacePoint& p) const;
  Real at(const PlanePoint& p) const;
  /// Foot of the common perpendicular between g and the axis (the crossing
  /// point when they meet).
  Real at(const Geodesic& g) const;
  /// The point of the axis at parameter s.
  SpacePoint point(const Real& s) const;

 private:
  Geodesic axis_;
  MobiusMap to_frame_;
};

/// Hyperbolic distance from p to the geodesic g.
Real point_geodesic_distance(const SpacePoint& p, const Geodesic& g);

}  // namespace hypesi
