#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/float128.hpp>

namespace hypesi {

// Quad precision throughout. Long primitive words push geodesic endpoints to
// within ~1e-15 of each other on the sphere, which double cannot separate.
using Real = boost::multiprecision::float128;
using Complex = std::complex<Real>;

inline const Real kPi = boost::multiprecision::float128(
    "3.14159265358979323846264338327950288");

inline double to_double(const Real& x) { return x.convert_to<double>(); }

inline Real abs_sq(const Complex& z) {
  return z.real() * z.real() + z.imag() * z.imag();
}

// Magnitude of a complex value; avoids std::abs's hypot path for speed.
inline Real modulus(const Complex& z) {
  using boost::multiprecision::sqrt;
  return sqrt(abs_sq(z));
}

/// Numerical thresholds shared by every module.
///
/// `det`, `trace` and `fixed_point` are the unit-scale tolerances; `perp`
/// bounds orthogonality residuals and `angle` the right-angle test.
/// `degenerate` is the chordal separation below which two boundary points are
/// treated as the same point.
struct Tolerances {
  Real det = Real(1e-9);
  Real trace = Real(1e-9);
  Real fixed_point = Real(1e-9);
  Real perp = Real(1e-8);
  Real angle = Real(1e-7);
  Real degenerate = Real(1e-24);

  /// Scales every unit tolerance from a single base value.
  static Tolerances from_base(double base);
};

const Tolerances& tolerances();
// Not synchronized: call before starting worker threads.
void set_tolerances(const Tolerances& tol);

/// Raised when an operation is asked for something undefined on its input
/// (the axis of a parabolic, the perpendicular of asymptotic geodesics, ...).
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computed object breaks an invariant the theory guarantees.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hypesi
