#pragma once

#include <array>
#include <vector>

#include "hypesi/geodesic.hpp"

namespace hypesi {

enum class Seam { L, LA, LB };

const char* to_string(Seam s);

/// Generators with their half-turn frame. A = H_L H_{L_A}, B = H_L H_{L_B}.
struct GroupFrame {
  MobiusMap genA;
  MobiusMap genB;
  Geodesic axisA;
  Geodesic axisB;
  Geodesic axisAinvB;
  Geodesic lineL;
  Geodesic lineLA;
  Geodesic lineLB;
  MobiusMap halfL;
  MobiusMap halfLA;
  MobiusMap halfLB;
  /// [Ax_A, L_A, Ax_{A^-1 B}, L_B, Ax_B, L]
  std::array<Geodesic, 6> hexagon;

  const Geodesic& line(Seam s) const;
  const MobiusMap& half_turn(Seam s) const;
  /// Real entries (a Fuchsian frame).
  bool planar() const;
};

GroupFrame build_frame(const MobiusMap& a, const MobiusMap& b);

/// Perpendicularity residual of each cyclic hexagon adjacency.
std::array<Real, 6> hexagon_residuals(const GroupFrame& frame);

/// Residuals |A - H_L H_{L_A}| and |B - H_L H_{L_B}| (relative, up to sign).
std::array<Real, 2> defining_residuals(const GroupFrame& frame);

MobiusMap extension_element(const GroupFrame& frame, const std::vector<Seam>& word);

struct ModelGroupReport {
  bool axes_disjoint = false;
  bool hexagon_convex = false;
  bool all_hyperbolic = false;
  bool verdict = false;
};

/// Requires real generators; throws GeometryError("model validation requires H2").
ModelGroupReport validate_model_group(const GroupFrame& frame);

/// Hexagon vertices (adjacent side crossings) in order, when all six exist.
std::vector<PlanePoint> hexagon_vertices(const GroupFrame& frame);

struct WindingReport {
  std::array<bool, 3> support_found{};
  /// Best one-sided margin per axis (>= -tol means a support plane exists).
  std::array<Real, 3> margin{};
  int sample_count = 0;
  bool verdict = false;
};

/// Limit-set samples: fixed points of reduced words up to word_len_cap, at
/// most sample_cap distinct points.
std::vector<BoundaryPoint> limit_set_samples(const GroupFrame& frame, int word_len_cap,
                                             int sample_cap);

/// Best margin over support planes through `axis`: max over planes of the
/// smallest signed sine of the angle between a sample and the plane. Samples
/// on the axis endpoints are ignored.
Real support_plane_margin(const Geodesic& axis, const std::vector<BoundaryPoint>& samples,
                          int angle_steps = 720);

/// Heuristic: for each of Ax_A, Ax_B, Ax_{A^-1 B}, does some totally geodesic
/// plane through the axis have every sample on one closed side.
WindingReport winding_group_check(const GroupFrame& frame, int word_len_cap,
                                  int sample_cap = 20000);

}  // namespace hypesi
