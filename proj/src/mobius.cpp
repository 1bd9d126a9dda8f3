#include "hypesi/mobius.hpp"

#include <algorithm>

namespace hypesi {

using boost::multiprecision::asinh;
using boost::multiprecision::fabs;
using boost::multiprecision::log;
using boost::multiprecision::sqrt;

const Complex& BoundaryPoint::value() const {
  if (infinite_) throw GeometryError("boundary point is infinity");
  return value_;
}

bool BoundaryPoint::is_real(const Real& tol) const {
  if (infinite_) return true;
  return fabs(value_.imag()) <= tol * std::max(Real(1), modulus(value_));
}

Real chordal_distance(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (p.is_infinite() && q.is_infinite()) return 0;
  if (p.is_infinite()) return 2 / sqrt(1 + abs_sq(q.value()));
  if (q.is_infinite()) return 2 / sqrt(1 + abs_sq(p.value()));
  const Complex& z = p.value();
  const Complex& w = q.value();
  return 2 * modulus(z - w) / sqrt((1 + abs_sq(z)) * (1 + abs_sq(w)));
}

Real hyperbolic_distance(const SpacePoint& p, const SpacePoint& q) {
  const Real dt = p.t - q.t;
  const Real euclid = sqrt(abs_sq(p.z - q.z) + dt * dt);
  return 2 * asinh(euclid / (2 * sqrt(p.t * q.t)));
}

const char* to_string(IsometryClass c) {
  switch (c) {
    case IsometryClass::identity: return "identity";
    case IsometryClass::parabolic: return "parabolic";
    case IsometryClass::elliptic: return "elliptic";
    case IsometryClass::hyperbolic: return "hyperbolic";
    case IsometryClass::loxodromic_nonreal: return "loxodromic-nonreal";
  }
  return "unknown";
}

MobiusMap::MobiusMap() : m_{Complex(1), Complex(0), Complex(0), Complex(1)} {}

MobiusMap MobiusMap::from_entries(const Complex& a, const Complex& b, const Complex& c,
                                  const Complex& d) {
  const Complex det = a * d - b * c;
  if (det == Complex(0)) throw GeometryError("singular matrix");
  const Complex root = std::sqrt(det);
  return MobiusMap({a / root, b / root, c / root, d / root});
}

MobiusMap MobiusMap::diagonal(const Complex& lambda) {
  if (lambda == Complex(0)) throw GeometryError("singular matrix");
  return MobiusMap({lambda, Complex(0), Complex(0), Complex(1) / lambda});
}

Real MobiusMap::scale() const {
  Real s = 0;
  for (const auto& e : m_) s = std::max(s, modulus(e));
  return s;
}

Real MobiusMap::determinant_defect() const {
  const Real size = std::max(Real(1), modulus(m_[0] * m_[3]) + modulus(m_[1] * m_[2]));
  return modulus(determinant() - Complex(1)) / size;
}

bool MobiusMap::is_real(const Real& tol) const {
  const Real bound = tol * std::max(Real(1), scale());
  return std::all_of(m_.begin(), m_.end(),
                     [&](const Complex& e) { return fabs(e.imag()) <= bound; });
}

MobiusMap MobiusMap::operator-() const { return MobiusMap({-m_[0], -m_[1], -m_[2], -m_[3]}); }

MobiusMap compose(const MobiusMap& m1, const MobiusMap& m2) {
  const auto& x = m1.m_;
  const auto& y = m2.m_;
  return MobiusMap({x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                    x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]});
}

MobiusMap inverse(const MobiusMap& m) {
  return MobiusMap({m.m_[3], -m.m_[1], -m.m_[2], m.m_[0]});
}

MobiusMap conjugate(const MobiusMap& m, const MobiusMap& w) {
  return compose(compose(w, m), inverse(w));
}

BoundaryPoint apply(const MobiusMap& m, const BoundaryPoint& z) {
  if (z.is_infinite()) {
    if (m.c() == Complex(0)) return BoundaryPoint::infinity();
    return BoundaryPoint(m.a() / m.c());
  }
  const Complex den = m.c() * z.value() + m.d();
  if (den == Complex(0)) return BoundaryPoint::infinity();
  return BoundaryPoint((m.a() * z.value() + m.b()) / den);
}

SpacePoint apply(const MobiusMap& m, const SpacePoint& p) {
  const Complex czd = m.c() * p.z + m.d();
  const Real t2 = p.t * p.t;
  const Real den = abs_sq(czd) + abs_sq(m.c()) * t2;
  const Complex num = (m.a() * p.z + m.b()) * std::conj(czd) + m.a() * std::conj(m.c()) * t2;
  return SpacePoint{num / den, p.t / den};
}

namespace {
Real matrix_gap(const MobiusMap& m1, const MobiusMap& m2, int sign) {
  const Real s = Real(sign);
  Real g = 0;
  g = std::max(g, modulus(m1.a() - s * m2.a()));
  g = std::max(g, modulus(m1.b() - s * m2.b()));
  g = std::max(g, modulus(m1.c() - s * m2.c()));
  g = std::max(g, modulus(m1.d() - s * m2.d()));
  return g;
}
}  // namespace

Real isometry_distance(const MobiusMap& m1, const MobiusMap& m2) {
  const Real size = std::max({Real(1), m1.scale(), m2.scale()});
  return std::min(matrix_gap(m1, m2, 1), matrix_gap(m1, m2, -1)) / size;
}

bool same_isometry(const MobiusMap& m1, const MobiusMap& m2, const Real& tol) {
  return isometry_distance(m1, m2) <= tol;
}

bool is_plus_minus_identity(const MobiusMap& m) {
  const Real bound = tolerances().det * std::max(Real(1), m.scale());
  return modulus(m.b()) <= bound && modulus(m.c()) <= bound && modulus(m.a() - m.d()) <= bound;
}

IsometryClass classify(const MobiusMap& m) {
  if (is_plus_minus_identity(m)) return IsometryClass::identity;
  const Complex t = m.trace();
  const Real eps = tolerances().trace;
  if (fabs(t.imag()) > eps * std::max(Real(1), fabs(t.real())))
    return IsometryClass::loxodromic_nonreal;
  const Real at = fabs(t.real());
  if (fabs(at - 2) <= eps) return IsometryClass::parabolic;
  return at < 2 ? IsometryClass::elliptic : IsometryClass::hyperbolic;
}

namespace {

struct RootPair {
  BoundaryPoint first;   // paired with eigenvalue (t + s) / 2
  BoundaryPoint second;  // paired with eigenvalue (t - s) / 2
  Complex mu_first;
  Complex mu_second;
};

// Roots of c z^2 + (d - a) z - b = 0 without cancellation: the large root
// w / 2c and the small root -2b / w, with w = (a - d) + s chosen large.
RootPair fixed_point_roots(const MobiusMap& m) {
  const Complex t = m.trace();
  Complex s = std::sqrt(t * t - Complex(4));
  const Complex amd = m.a() - m.d();
  if (abs_sq(amd - s) > abs_sq(amd + s)) s = -s;
  const Complex w = amd + s;
  RootPair r;
  r.mu_first = (t + s) / Real(2);
  r.mu_second = (t - s) / Real(2);
  r.first = (m.c() == Complex(0)) ? BoundaryPoint::infinity() : BoundaryPoint(w / (Real(2) * m.c()));
  if (w == Complex(0)) {
    // a == d and s == 0: only possible for +-identity or b*c == 0 parabolics.
    r.second = r.first;
  } else {
    r.second = BoundaryPoint(Real(-2) * m.b() / w);
  }
  return r;
}

}  // namespace

std::vector<BoundaryPoint> fixed_points(const MobiusMap& m) {
  const IsometryClass cls = classify(m);
  if (cls == IsometryClass::identity) throw GeometryError("no isolated fixed points");
  if (cls == IsometryClass::parabolic) {
    if (m.c() == Complex(0)) return {BoundaryPoint::infinity()};
    return {BoundaryPoint((m.a() - m.d()) / (Real(2) * m.c()))};
  }
  const RootPair r = fixed_point_roots(m);
  return {r.first, r.second};
}

OrientedFixedPoints oriented_fixed_points(const MobiusMap& m) {
  const IsometryClass cls = classify(m);
  if (cls == IsometryClass::identity) throw GeometryError("no isolated fixed points");
  if (cls == IsometryClass::parabolic) throw GeometryError("axis undefined (parabolic)");
  const RootPair r = fixed_point_roots(m);
  if (abs_sq(r.mu_first) >= abs_sq(r.mu_second)) return {r.second, r.first, r.mu_first};
  return {r.first, r.second, r.mu_second};
}

Real translation_length(const MobiusMap& m) {
  const OrientedFixedPoints f = oriented_fixed_points(m);
  return 2 * log(modulus(f.multiplier));
}

bool is_half_turn(const MobiusMap& m) {
  return modulus(m.trace()) < tolerances().trace && !is_plus_minus_identity(m);
}

}  // namespace hypesi
