#pragma once

#include <string>
#include <vector>

#include "hypesi/labeling.hpp"

namespace hypesi {

struct EsiRecord {
  long index = 0;
  std::string conjugator;
  Seam base = Seam::L;
  Geodesic line;
  PlanePoint point;
  Real angle = 0;
  /// Arclength position of the crossing along the axis of E.
  Real param = 0;
  bool right_angle = false;
};

struct EsiSet {
  RationalLabel label;
  Geodesic axis;
  Real translation_length = 0;
  long right_anchor = 0;
  /// One closed period of crossings, ordered along the axis.
  std::vector<EsiRecord> records;
  int essential_count = 0;
  int quotient_count = 0;
  /// Largest hyperbolic distance between H_R(Q_j) and Q_{mirror(j)}, where R
  /// is the perpendicular line at the anchor.
  Real mirror_residual = 0;
  /// Even labels: hyperbolic distance between the crossings of Ax_E and of
  /// Ax_{E~} with L. Zero for odd labels.
  Real shared_crossing_residual = 0;

  static int expected_essential(const RationalLabel& x) { return 2 * static_cast<int>(x.sum() - 1); }
};

/// Throws GeometryError when the frame is not a certified model group.
EsiSet esi_points(const GroupFrame& frame, const RationalLabel& x);

/// Independent count: crossings of the axis of E with every line W(Y),
/// |W| <= word_cap, Y in {L, L_A, L_B}, taken modulo the translation length,
/// right angles excluded.
int brute_force_esi_count(const GroupFrame& frame, const RationalLabel& x, int word_cap);

enum class LoopTag { around_gamma0, around_gamma_inf };

const char* to_string(LoopTag t);

struct LoopDecomposition {
  /// Loops in order along the geodesic.
  std::vector<LoopTag> loops;
  /// Record indices (start, end) of the two segments forming each loop.
  std::vector<std::array<long, 4>> segments;
  /// Number of around-gamma_inf loops (p) and around-gamma0 loops (q).
  int count_inf = 0;
  int count_zero = 0;
};

/// A loop is the segment leaving an L crossing, closed up by its mirror
/// image. It is tagged by the other seam it touches: L_A means around-gamma0
/// (the cuff Ax_A), L_B around-gamma_inf.
LoopDecomposition loop_decomposition(const GroupFrame& frame, const EsiSet& esi);

struct WindingPattern {
  std::vector<int> runs;
  /// Continued fraction decoded from the cyclic tag word.
  std::vector<long> decoded;
  /// Euclidean continued fraction of the label.
  std::vector<long> expected;
  bool matches() const { return decoded == expected; }
};

/// Cyclic run lengths, starting at the first run boundary.
std::vector<int> cyclic_runs(const std::vector<LoopTag>& tags);

/// Inverts the letter substitution that builds a Christoffel-type cyclic word
/// from its continued fraction: the majority letter comes in runs of a0 or
/// a0 + 1 separated by single minority letters; strip a0 from every run and
/// recurse. Throws InvariantViolation when the word has no such structure.
std::vector<long> continued_fraction_from_tags(const std::vector<LoopTag>& tags);

WindingPattern winding_pattern(const RationalLabel& x, const LoopDecomposition& d);

}  // namespace hypesi
