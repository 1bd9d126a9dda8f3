#include "hypesi/geodesic.hpp"

#include <algorithm>

namespace hypesi {

using boost::multiprecision::atan2;
using boost::multiprecision::exp;
using boost::multiprecision::fabs;
using boost::multiprecision::log;
using boost::multiprecision::sqrt;

Geodesic::Geodesic(const BoundaryPoint& e1, const BoundaryPoint& e2) : e1_(e1), e2_(e2) {
  if (chordal_distance(e1, e2) <= tolerances().degenerate)
    throw GeometryError("degenerate geodesic (coincident endpoints)");
}

bool Geodesic::is_real(const Real& tol) const { return e1_.is_real(tol) && e2_.is_real(tol); }

Real geodesic_distance(const Geodesic& g1, const Geodesic& g2) {
  const Real same = std::max(chordal_distance(g1.e1(), g2.e1()), chordal_distance(g1.e2(), g2.e2()));
  const Real swap = std::max(chordal_distance(g1.e1(), g2.e2()), chordal_distance(g1.e2(), g2.e1()));
  return std::min(same, swap);
}

bool same_geodesic(const Geodesic& g1, const Geodesic& g2, const Real& tol) {
  return geodesic_distance(g1, g2) <= tol;
}

Geodesic image(const MobiusMap& m, const Geodesic& g) {
  return Geodesic(apply(m, g.e1()), apply(m, g.e2()));
}

namespace {

bool real_point(const BoundaryPoint& p) {
  return p.is_infinite() || p.value().imag() == 0;
}

}  // namespace

MobiusMap canonical_map(const Geodesic& g) {
  const Complex one(1), zero(0);
  if (g.e2().is_infinite()) return MobiusMap::from_entries(one, -g.e1().value(), zero, one);
  if (g.e1().is_infinite()) return MobiusMap::from_entries(zero, -one, one, -g.e2().value());
  const Complex p = g.e1().value();
  const Complex q = g.e2().value();
  if (real_point(g.e1()) && real_point(g.e2()) && p.real() < q.real())
    return MobiusMap::from_entries(-one, p, one, -q);
  return MobiusMap::from_entries(one, -p, one, -q);
}

MobiusMap half_turn_about(const Geodesic& g) {
  const Complex i(0, 1);
  if (g.e2().is_infinite() || g.e1().is_infinite()) {
    const Complex p = g.e2().is_infinite() ? g.e1().value() : g.e2().value();
    return MobiusMap::from_entries(Complex(1) / i, Real(-2) * p / i, Complex(0), Complex(-1) / i);
  }
  const Complex p = g.e1().value();
  const Complex q = g.e2().value();
  const Complex k = i * (p - q);
  return MobiusMap::from_entries((p + q) / k, Real(-2) * p * q / k, Complex(2) / k, -(p + q) / k);
}

Geodesic axis_of(const MobiusMap& m) {
  const IsometryClass cls = classify(m);
  if (cls == IsometryClass::identity || cls == IsometryClass::parabolic)
    throw GeometryError(std::string("axis undefined (") + to_string(cls) + ")");
  const OrientedFixedPoints f = oriented_fixed_points(m);
  return Geodesic(f.repelling, f.attracting);
}

Geodesic common_perpendicular(const Geodesic& g1, const Geodesic& g2) {
  const Real eps = tolerances().degenerate;
  for (const auto* p : {&g1.e1(), &g1.e2()})
    for (const auto* q : {&g2.e1(), &g2.e2()})
      if (chordal_distance(*p, *q) <= eps)
        throw GeometryError("perpendicular undefined (parallel/asymptotic)");
  return axis_of(half_turn_about(g1) * half_turn_about(g2));
}

Real perpendicularity_residual(const Geodesic& g1, const Geodesic& g2) {
  const MobiusMap t = canonical_map(g1);
  BoundaryPoint u = apply(t, g2.e1());
  BoundaryPoint v = apply(t, g2.e2());
  if (!u.is_infinite() && !v.is_infinite()) {
    const Real k = sqrt(modulus(u.value() * v.value()));
    if (k > 0) {
      u = BoundaryPoint(u.value() / k);
      v = BoundaryPoint(v.value() / k);
    }
  }
  // The half-turn about (0, inf) is z -> -z.
  const auto flip = [](const BoundaryPoint& p) {
    return p.is_infinite() ? p : BoundaryPoint(-p.value());
  };
  return std::max(chordal_distance(flip(u), v), chordal_distance(flip(v), u));
}

namespace {

// Endpoints of g2 in the canonical frame of g1, when both are real and finite.
bool frame_endpoints(const Geodesic& g1, const Geodesic& g2, Real& u, Real& v) {
  const Real tol = tolerances().fixed_point;
  if (!g1.is_real(tol) || !g2.is_real(tol)) throw GeometryError("geodesics are not in H^2");
  const MobiusMap t = canonical_map(g1);
  const BoundaryPoint pu = apply(t, g2.e1());
  const BoundaryPoint pv = apply(t, g2.e2());
  if (pu.is_infinite() || pv.is_infinite()) return false;
  u = pu.value().real();
  v = pv.value().real();
  return true;
}

}  // namespace

bool crosses_h2(const Geodesic& g1, const Geodesic& g2) {
  Real u, v;
  return frame_endpoints(g1, g2, u, v) && u * v < 0;
}

PlanePoint intersection_point_h2(const Geodesic& g1, const Geodesic& g2) {
  Real u, v;
  if (!frame_endpoints(g1, g2, u, v) || !(u * v < 0)) throw GeometryError("disjoint in H^2");
  const Complex w(0, sqrt(-u * v));
  const BoundaryPoint z = apply(inverse(canonical_map(g1)), BoundaryPoint(w));
  return PlanePoint{z.value()};
}

Real angle_at_intersection_h2(const Geodesic& g1, const Geodesic& g2) {
  Real u, v;
  if (!frame_endpoints(g1, g2, u, v) || !(u * v < 0)) throw GeometryError("disjoint in H^2");
  // g1 is now the upward imaginary axis; g2 the semicircle from u to v.
  const Real r = sqrt(-u * v);
  const Real mid = (u + v) / 2;
  const Real dir = v > u ? Real(1) : Real(-1);
  return atan2(r, dir * mid);
}

Complex cross_ratio(const BoundaryPoint& a, const BoundaryPoint& b, const BoundaryPoint& c,
                    const BoundaryPoint& d) {
  const BoundaryPoint* pts[4] = {&a, &b, &c, &d};
  int infinite = 0;
  for (int i = 0; i < 4; ++i) {
    if (pts[i]->is_infinite()) ++infinite;
    for (int j = i + 1; j < 4; ++j)
      if (chordal_distance(*pts[i], *pts[j]) <= tolerances().degenerate)
        throw GeometryError("cross ratio of repeated points");
  }
  if (infinite > 1) throw GeometryError("cross ratio with more than one infinite point");
  const auto diff = [](const BoundaryPoint& x, const BoundaryPoint& y) {
    if (x.is_infinite() || y.is_infinite()) return Complex(1);
    return x.value() - y.value();
  };
  return diff(a, c) * diff(b, d) / (diff(a, d) * diff(b, c));
}

AxisCoordinate::AxisCoordinate(const Geodesic& axis)
    : axis_(axis), to_frame_(canonical_map(axis)) {}

Real AxisCoordinate::at(const SpacePoint& p) const {
  const SpacePoint q = apply(to_frame_, p);
  return log(abs_sq(q.z) + q.t * q.t) / 2;
}

Real AxisCoordinate::at(const PlanePoint& p) const {
  return at(SpacePoint{Complex(p.z.real()), p.z.imag()});
}

Real AxisCoordinate::at(const Geodesic& g) const {
  const BoundaryPoint u = apply(to_frame_, g.e1());
  const BoundaryPoint v = apply(to_frame_, g.e2());
  if (u.is_infinite() || v.is_infinite()) throw GeometryError("geodesic shares an endpoint with the axis");
  const Real k = modulus(u.value() * v.value());
  if (k == 0) throw GeometryError("geodesic shares an endpoint with the axis");
  return log(k) / 2;
}

SpacePoint AxisCoordinate::point(const Real& s) const {
  return apply(inverse(to_frame_), SpacePoint{Complex(0), exp(s)});
}

Real point_geodesic_distance(const SpacePoint& p, const Geodesic& g) {
  const AxisCoordinate c(g);
  return hyperbolic_distance(p, c.point(c.at(p)));
}

}  // namespace hypesi
