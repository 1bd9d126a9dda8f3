#include "hypesi/labeling.hpp"

#include "hypesi/words.hpp"

namespace hypesi {

using boost::multiprecision::log;

namespace {
long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
}  // namespace

bool Labeling::combinatorial_right(long j) const {
  const long d = j - right_anchor;
  return d % n == 0;
}

Labeling make_labeling(const GroupFrame& frame, const RationalLabel& x) {
  const PrimitiveWord w = primitive_word(x);
  const MobiusMap e = evaluate(w.letters, frame.genA, frame.genB);
  const OrientedFixedPoints f = oriented_fixed_points(e);
  Labeling lab{x,
               w,
               static_cast<long>(w.length()),
               w.palindrome() ? 0L : static_cast<long>(w.first.size()),
               e,
               Geodesic(f.repelling, f.attracting),
               2 * log(modulus(f.multiplier))};
  return lab;
}

LabeledLine labeled_line(const GroupFrame& frame, const Labeling& lab, long j) {
  const long period = 2 * lab.n;
  const long k = j + 1;
  const long m = floor_div(k - 1, period);
  const long kk = k - m * period;  // 1 .. 2N
  const std::string& letters = lab.word.letters;
  std::string prefix;
  Seam base = Seam::L;
  if (kk % 2 == 1) {
    prefix = letters.substr(0, static_cast<std::size_t>((kk + 1) / 2 - 1));
  } else {
    const std::size_t i = static_cast<std::size_t>(kk / 2);
    prefix = letters.substr(0, i);
    base = letters[i - 1] == 'A' ? Seam::LA : Seam::LB;
  }
  MobiusMap w = evaluate(prefix, frame.genA, frame.genB);
  const MobiusMap step = m >= 0 ? lab.e : inverse(lab.e);
  for (long r = 0; r < (m >= 0 ? m : -m); ++r) w = step * w;
  const std::string conj = free_reduce(word_power(letters, m) + prefix);
  return LabeledLine{j, conj, base, w, image(w, frame.line(base))};
}

std::vector<LabeledLine> window_lines(const GroupFrame& frame, const Labeling& lab) {
  std::vector<LabeledLine> out;
  for (long j = lab.first_index(); j <= lab.last_index(); ++j)
    out.push_back(labeled_line(frame, lab, j));
  return out;
}

}  // namespace hypesi
