#pragma once

#include <string>
#include <vector>

#include "hypesi/farey.hpp"
#include "hypesi/frame.hpp"

namespace hypesi {

/// Half-turn lines crossed by the axis of E_{p/q}, labelled by integers.
///
/// Writing E = X_1 ... X_N with X_i = H_L H_{L_{X_i}}, the axis meets in turn
/// the lines of the reflection word H_L H_{L_{X_1}} H_L H_{L_{X_2}} ... Index
/// j = 2i - 2 is W(L) with W = X_1 ... X_{i-1}; index j = 2i - 1 is
/// W(L_{X_i}) with W = X_1 ... X_i. Index j + 2N is the E-translate of j.
/// The crossings at right_anchor and right_anchor +- N are perpendicular: the
/// anchor is 0 for palindromes and |E_{l/m}| for products E_{l/m} E_{r/s}.
struct Labeling {
  RationalLabel label;
  PrimitiveWord word;
  long n = 0;
  long right_anchor = 0;
  MobiusMap e;
  Geodesic axis;
  Real translation_length = 0;

  long first_index() const { return right_anchor - n; }
  long last_index() const { return right_anchor + n; }
  long mirror(long j) const { return 2 * right_anchor - j; }
  bool combinatorial_right(long j) const;
};

struct LabeledLine {
  long index = 0;
  /// Conjugator W as a freely reduced word over {A, B, a, b}.
  std::string conjugator;
  Seam base = Seam::L;
  MobiusMap w;
  Geodesic line;
};

Labeling make_labeling(const GroupFrame& frame, const RationalLabel& x);
LabeledLine labeled_line(const GroupFrame& frame, const Labeling& lab, long j);

/// Every index of the closed window [first_index, last_index]: 2N + 1 lines,
/// the two ends being E-translates of each other.
std::vector<LabeledLine> window_lines(const GroupFrame& frame, const Labeling& lab);

}  // namespace hypesi
