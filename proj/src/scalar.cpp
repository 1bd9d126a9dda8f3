#include "hypesi/scalar.hpp"

namespace hypesi {

namespace {
Tolerances& mutable_tolerances() {
  static Tolerances tol;
  return tol;
}
}  // namespace

Tolerances Tolerances::from_base(double base) {
  if (!(base > 0.0)) throw std::invalid_argument("tolerance must be positive");
  Tolerances tol;
  tol.det = Real(base);
  tol.trace = Real(base);
  tol.fixed_point = Real(base);
  tol.perp = Real(base) * 10;
  tol.angle = Real(base) * 100;
  return tol;
}

const Tolerances& tolerances() { return mutable_tolerances(); }

void set_tolerances(const Tolerances& tol) { mutable_tolerances() = tol; }

}  // namespace hypesi
