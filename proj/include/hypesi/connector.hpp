#pragma once

#include <string>
#include <vector>

#include "hypesi/esi.hpp"
#include "hypesi/labeling.hpp"

namespace hypesi {

/// A labelled pair (L_j, Ax_E), transferred from the planar labeling.
struct GeneralizedPair {
  long index = 0;
  std::string conjugator;
  Seam base = Seam::L;
  Geodesic line;
  Geodesic axis;
  /// Perpendicular by construction (j - anchor divisible by N).
  bool right_angle = false;
};

/// One closed period of pairs, indices [first_index, last_index).
/// Throws GeometryError("degenerate pair") when a line shares an endpoint with
/// the axis, and when a short word fails to be loxodromic.
std::vector<GeneralizedPair> generalized_esi_pairs(const GroupFrame& frame, const RationalLabel& x);

struct ConnectorRecord {
  long index = 0;
  std::string conjugator;
  Seam base = Seam::L;
  Geodesic line;
  Geodesic axis;
  Geodesic orthogonal;
  /// H_{L_j}(Ax_E), the axis of H_{L_j} E H_{L_j}.
  Geodesic partner_axis;
  /// Axis parameter of the foot on Ax_E.
  Real foot_on_axis = 0;
  /// Foot on the partner axis, carried back to Ax_E by the group element
  /// taking the partner axis to Ax_E.
  Real foot_on_partner_axis = 0;
  /// Length of the connector between its two feet.
  Real foot_separation = 0;
  Real perp_line = 0;
  Real perp_axis = 0;
  /// geodesic_distance(H_{L_j}(O_j), O_j).
  Real half_turn_residual = 0;
  /// geodesic_distance(common_perpendicular(L_j, partner axis), O_j).
  Real partner_residual = 0;
};

struct Mark {
  long index = 0;
  /// Axis parameter reduced to one period starting at the first anchor.
  Real param = 0;
  /// Index of the partner mark (the other end of the same quotient connector).
  long partner = 0;
};

struct LoopReport {
  std::vector<LoopTag> tags;
  /// Cyclic gaps (start mark index, end mark index) making up each loop.
  std::vector<std::vector<std::pair<long, long>>> gaps;
  int count_inf = 0;
  int count_zero = 0;
  int count() const { return static_cast<int>(tags.size()); }
};

struct ConnectorSet {
  RationalLabel label;
  Geodesic axis;
  Real translation_length = 0;
  long right_anchor = 0;
  long n = 0;
  /// Kept pairs in index order.
  std::vector<ConnectorRecord> records;
  /// Feet of the right-angle pairs at the anchor and the anchor - N.
  Real anchor_param = 0;
  Real opposite_param = 0;
  Seam anchor_base = Seam::L;
  Seam opposite_base = Seam::L;
  /// Sorted by param.
  std::vector<Mark> marks;
  /// Quotient connectors as pairs of record indices j < j'.
  std::vector<std::pair<long, long>> pairs;
  /// Largest distance between V(O_j) and O_{j'} over the pairs, V the group
  /// element carrying one to the other.
  Real pairing_residual = 0;
  /// Largest |foot_on_partner_axis(j) - foot_on_axis(j')| modulo the period.
  Real partner_foot_residual = 0;
  LoopReport loops;

  int marked_points() const { return static_cast<int>(marks.size()); }
  int quotient_connectors() const { return static_cast<int>(pairs.size()); }
  const ConnectorRecord& record(long j) const;
};

/// Throws InvariantViolation("residual overflow ...") when an invariant
/// residual exceeds tolerance.
ConnectorSet connectors(const GroupFrame& frame, const RationalLabel& x);

/// Walks the marks cyclically along the axis. Each gap between consecutive
/// marks is closed up by the connectors at its ends; a gap and its mirror
/// image form one loop, tagged by the non-L seam it touches. Throws
/// InvariantViolation("mark-ordering failure") on ties.
LoopReport loop_count(const ConnectorSet& set);

/// Does `candidate` meet Ax_E orthogonally at a point F and also meet some
/// line M = W(Y), |W| <= word_cap, so that H_M preserves it and moves F.
/// A negative word_cap means p + q.
bool transversal_check(const GroupFrame& frame, const Geodesic& candidate, const RationalLabel& x,
                       int word_cap = -1);

struct ContinuityStep {
  Real angle = 0;
  /// Largest foot separation over the records.
  Real max_separation = 0;
  int marked_points = 0;
  int loops = 0;
};

struct ContinuityReport {
  std::vector<ContinuityStep> steps;
  /// Per record: separations along the path never increase (within tol).
  bool monotone = true;
  /// Largest distance from a connector at the Fuchsian end to the crossing
  /// Q_j of the planar computation.
  Real endpoint_q_distance = 0;
  Real endpoint_separation = 0;
};

/// Interpolates the twist angle linearly from `start` to 0 in `steps` steps.
ContinuityReport deformation_continuity(const MobiusMap& a, const MobiusMap& b,
                                        const Real& start, const RationalLabel& x, int steps);

}  // namespace hypesi
