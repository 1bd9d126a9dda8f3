#include "hypesi/frame.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

namespace hypesi {

using boost::multiprecision::atan2;
using boost::multiprecision::fabs;

const char* to_string(Seam s) {
  switch (s) {
    case Seam::L: return "L";
    case Seam::LA: return "LA";
    case Seam::LB: return "LB";
  }
  return "?";
}

const Geodesic& GroupFrame::line(Seam s) const {
  return s == Seam::L ? lineL : (s == Seam::LA ? lineLA : lineLB);
}

const MobiusMap& GroupFrame::half_turn(Seam s) const {
  return s == Seam::L ? halfL : (s == Seam::LA ? halfLA : halfLB);
}

bool GroupFrame::planar() const {
  const Real tol = tolerances().fixed_point;
  return genA.is_real(tol) && genB.is_real(tol);
}

namespace {

bool loxodromic(const MobiusMap& m) {
  const IsometryClass c = classify(m);
  return c == IsometryClass::hyperbolic || c == IsometryClass::loxodromic_nonreal;
}

Geodesic seam_line(const MobiusMap& hl, const MobiusMap& g, const char* name) {
  const MobiusMap h = hl * g;
  if (modulus(h.trace()) > tolerances().trace * std::max(Real(1), h.scale()))
    throw InvariantViolation(std::string("H_L ") + name + " is not a half-turn");
  return axis_of(h);
}

}  // namespace

GroupFrame build_frame(const MobiusMap& a, const MobiusMap& b) {
  if (!loxodromic(a)) throw GeometryError("generator A is not loxodromic");
  if (!loxodromic(b)) throw GeometryError("generator B is not loxodromic");
  const Geodesic axA = axis_of(a);
  const Geodesic axB = axis_of(b);
  const Geodesic l = [&] {
    try {
      return common_perpendicular(axA, axB);
    } catch (const GeometryError&) {
      throw GeometryError("axes of A and B share an endpoint");
    }
  }();
  const MobiusMap hl = half_turn_about(l);
  const Geodesic la = seam_line(hl, a, "A");
  const Geodesic lb = seam_line(hl, b, "B");
  const Geodesic axAB = axis_of(inverse(a) * b);
  GroupFrame f{a, b, axA, axB, axAB, l, la, lb, hl, half_turn_about(la), half_turn_about(lb),
               {axA, la, axAB, lb, axB, l}};
  const auto res = hexagon_residuals(f);
  for (std::size_t i = 0; i < res.size(); ++i)
    if (!(res[i] < tolerances().perp))
      throw InvariantViolation("hexagon adjacency " + std::to_string(i) + " is not orthogonal");
  return f;
}

std::array<Real, 6> hexagon_residuals(const GroupFrame& frame) {
  std::array<Real, 6> r{};
  for (std::size_t i = 0; i < 6; ++i)
    r[i] = perpendicularity_residual(frame.hexagon[i], frame.hexagon[(i + 1) % 6]);
  return r;
}

std::array<Real, 2> defining_residuals(const GroupFrame& frame) {
  return {isometry_distance(frame.genA, frame.halfL * frame.halfLA),
          isometry_distance(frame.genB, frame.halfL * frame.halfLB)};
}

MobiusMap extension_element(const GroupFrame& frame, const std::vector<Seam>& word) {
  MobiusMap m;
  for (Seam s : word) m = m * frame.half_turn(s);
  return m;
}

std::vector<PlanePoint> hexagon_vertices(const GroupFrame& frame) {
  std::vector<PlanePoint> v;
  for (std::size_t i = 0; i < 6; ++i)
    v.push_back(intersection_point_h2(frame.hexagon[i], frame.hexagon[(i + 1) % 6]));
  return v;
}

namespace {

bool hexagon_convex(const GroupFrame& frame) {
  std::vector<PlanePoint> verts;
  try {
    verts = hexagon_vertices(frame);
  } catch (const GeometryError&) {
    return false;
  }
  // Klein model: geodesics are chords, so hyperbolic convexity is Euclidean.
  std::vector<Complex> k;
  const Complex i(0, 1);
  for (const auto& p : verts) {
    const Complex w = (p.z - i) / (p.z + i);
    k.push_back(Real(2) * w / (Real(1) + abs_sq(w)));
  }
  int sign = 0;
  Real turning = 0;
  for (std::size_t n = 0; n < 6; ++n) {
    const Complex e1 = k[(n + 1) % 6] - k[n];
    const Complex e2 = k[(n + 2) % 6] - k[(n + 1) % 6];
    const Real cross = e1.real() * e2.imag() - e1.imag() * e2.real();
    const Real dot = e1.real() * e2.real() + e1.imag() * e2.imag();
    const int s = cross > 0 ? 1 : (cross < 0 ? -1 : 0);
    if (s == 0 || (sign != 0 && s != sign)) return false;
    sign = s;
    turning += atan2(cross, dot);
  }
  // Consistent turns that wind once, not a star.
  return fabs(fabs(turning) - 2 * kPi) < Real(1e-6);
}

bool disjoint_h2(const Geodesic& g1, const Geodesic& g2) {
  const Real tol = tolerances().fixed_point;
  if (!g1.is_real(tol) || !g2.is_real(tol)) return false;
  return !crosses_h2(g1, g2);
}

}  // namespace

ModelGroupReport validate_model_group(const GroupFrame& frame) {
  if (!frame.planar()) throw GeometryError("model validation requires H2");
  ModelGroupReport r;
  const MobiusMap& a = frame.genA;
  const MobiusMap& b = frame.genB;
  r.all_hyperbolic = true;
  for (const MobiusMap& m : {a, b, inverse(a) * b, a * b})
    r.all_hyperbolic = r.all_hyperbolic && classify(m) == IsometryClass::hyperbolic;
  r.axes_disjoint = disjoint_h2(frame.axisA, frame.axisB) &&
                    disjoint_h2(frame.axisA, frame.axisAinvB) &&
                    disjoint_h2(frame.axisB, frame.axisAinvB);
  r.hexagon_convex = hexagon_convex(frame);
  r.verdict = r.all_hyperbolic && r.axes_disjoint && r.hexagon_convex;
  return r;
}

std::vector<BoundaryPoint> limit_set_samples(const GroupFrame& frame, int word_len_cap,
                                             int sample_cap) {
  const MobiusMap gens[4] = {frame.genA, frame.genB, inverse(frame.genA), inverse(frame.genB)};
  // Generator index g and its inverse g ^ 2.
  std::vector<std::pair<MobiusMap, int>> level;
  std::vector<BoundaryPoint> out;
  std::set<std::tuple<long long, long long, long long>> seen;
  const auto add = [&](const BoundaryPoint& p) {
    double x = 0, y = 0, z = 1;
    if (!p.is_infinite()) {
      const Real n = 1 + abs_sq(p.value());
      x = to_double(2 * p.value().real() / n);
      y = to_double(2 * p.value().imag() / n);
      z = to_double((abs_sq(p.value()) - 1) / n);
    }
    const auto key = std::make_tuple(std::llround(x * 1e12), std::llround(y * 1e12),
                                     std::llround(z * 1e12));
    if (seen.insert(key).second) out.push_back(p);
  };
  for (int g = 0; g < 4; ++g) level.emplace_back(gens[g], g);
  for (int len = 1; len <= word_len_cap && !level.empty(); ++len) {
    for (const auto& [m, last] : level) {
      if (loxodromic(m))
        for (const auto& p : fixed_points(m)) {
          add(p);
          if (static_cast<int>(out.size()) >= sample_cap) return out;
        }
    }
    if (len == word_len_cap) break;
    std::vector<std::pair<MobiusMap, int>> next;
    next.reserve(level.size() * 3);
    for (const auto& [m, last] : level)
      for (int g = 0; g < 4; ++g)
        if (g != (last ^ 2)) next.emplace_back(m * gens[g], g);
    level.swap(next);
  }
  return out;
}

Real support_plane_margin(const Geodesic& axis, const std::vector<BoundaryPoint>& samples,
                          int angle_steps) {
  const MobiusMap t = canonical_map(axis);
  // Angles are exact to ~1e-30 in quad; the scan itself runs in double.
  std::vector<double> theta;
  for (const auto& p : samples) {
    if (chordal_distance(p, axis.e1()) < Real(1e-12) || chordal_distance(p, axis.e2()) < Real(1e-12))
      continue;
    const Complex z = apply(t, p).value();
    theta.push_back(to_double(atan2(z.imag(), z.real())));
  }
  if (theta.empty()) return 1;
  const auto margin = [&](double phi) {
    double m = 2;
    for (double th : theta) m = std::min(m, std::sin(th - phi));
    return m;
  };
  const double two_pi = 2 * to_double(kPi);
  double best_phi = 0, best = -2;
  for (int k = 0; k < angle_steps; ++k) {
    const double phi = two_pi * k / angle_steps;
    const double m = margin(phi);
    if (m > best) {
      best = m;
      best_phi = phi;
    }
  }
  // Golden-section refinement around the best grid angle.
  const double h = two_pi / angle_steps;
  double lo = best_phi - h, hi = best_phi + h;
  const double g = (std::sqrt(5.0) - 1) / 2;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = margin(x1), f2 = margin(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = margin(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = margin(x1);
    }
  }
  return std::max({best, f1, f2});
}

WindingReport winding_group_check(const GroupFrame& frame, int word_len_cap, int sample_cap) {
  const auto samples = limit_set_samples(frame, word_len_cap, sample_cap);
  if (samples.size() < 4) throw GeometryError("degenerate limit-set sample (fewer than 4 points)");
  WindingReport r;
  r.sample_count = static_cast<int>(samples.size());
  const Geodesic* axes[3] = {&frame.axisA, &frame.axisB, &frame.axisAinvB};
  r.verdict = true;
  for (int i = 0; i < 3; ++i) {
    r.margin[i] = support_plane_margin(*axes[i], samples);
    r.support_found[i] = r.margin[i] >= -tolerances().perp;
    r.verdict = r.verdict && r.support_found[i];
  }
  return r;
}

}  // namespace hypesi
