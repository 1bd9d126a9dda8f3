#include "hypesi/esi.hpp"

#include <algorithm>

#include "hypesi/words.hpp"

namespace hypesi {

using boost::multiprecision::atan2;
using boost::multiprecision::fabs;
using boost::multiprecision::floor;
using boost::multiprecision::log;
using boost::multiprecision::sqrt;

namespace {

SpacePoint lift(const PlanePoint& p) { return SpacePoint{Complex(p.z.real()), p.z.imag()}; }

void require_model(const GroupFrame& frame) {
  if (!validate_model_group(frame).verdict) throw GeometryError("not a certified model group");
}

}  // namespace

EsiSet esi_points(const GroupFrame& frame, const RationalLabel& x) {
  require_model(frame);
  const Labeling lab = make_labeling(frame, x);
  const AxisCoordinate coord(lab.axis);
  const Real eps_ang = tolerances().angle;

  EsiSet out{x, lab.axis, lab.translation_length, lab.right_anchor, {}, 0, 0, 0, 0};
  for (const LabeledLine& ll : window_lines(frame, lab)) {
    if (!crosses_h2(lab.axis, ll.line))
      throw InvariantViolation("axis of E_" + x.str() + " misses labelled line " +
                               std::to_string(ll.index));
    EsiRecord r{ll.index, ll.conjugator, ll.base, ll.line,
                intersection_point_h2(lab.axis, ll.line),
                angle_at_intersection_h2(lab.axis, ll.line), coord.at(ll.line), false};
    r.right_angle = fabs(r.angle - kPi / 2) < eps_ang;
    if (r.right_angle != lab.combinatorial_right(ll.index))
      throw InvariantViolation(std::string(r.right_angle ? "right angle at non-extreme index "
                                                         : "missing right angle at index ") +
                               std::to_string(ll.index) + " of " + x.str());
    out.records.push_back(r);
  }

  for (std::size_t i = 1; i < out.records.size(); ++i)
    if (!(out.records[i].param > out.records[i - 1].param))
      throw InvariantViolation("crossings out of order at index " +
                               std::to_string(out.records[i].index) + " of " + x.str());
  const Real span = out.records.back().param - out.records.front().param;
  if (fabs(span - lab.translation_length) > Real(1e-9) * std::max(Real(1), lab.translation_length))
    throw InvariantViolation("period-detection failure for " + x.str());

  // The window is closed, so its two ends are the same crossing on the quotient.
  for (std::size_t i = 0; i + 1 < out.records.size(); ++i)
    if (!out.records[i].right_angle) ++out.essential_count;
  out.quotient_count = out.essential_count / 2;

  const std::size_t anchor = static_cast<std::size_t>(lab.n);
  const MobiusMap hr = half_turn_about(out.records[anchor].line);
  for (const EsiRecord& r : out.records) {
    const long jm = lab.mirror(r.index);
    const EsiRecord& m = out.records[static_cast<std::size_t>(jm - lab.first_index())];
    out.mirror_residual =
        std::max(out.mirror_residual, hyperbolic_distance(apply(hr, lift(r.point)), lift(m.point)));
  }

  if (x.even()) {
    const MobiusMap partner =
        evaluate(lab.word.second + lab.word.first, frame.genA, frame.genB);
    const Geodesic partner_axis = axis_of(partner);
    out.shared_crossing_residual =
        hyperbolic_distance(lift(intersection_point_h2(frame.lineL, lab.axis)),
                            lift(intersection_point_h2(frame.lineL, partner_axis)));
  }
  return out;
}

int brute_force_esi_count(const GroupFrame& frame, const RationalLabel& x, int word_cap) {
  require_model(frame);
  const PrimitiveWord w = primitive_word(x);
  const MobiusMap e = evaluate(w.letters, frame.genA, frame.genB);
  const Geodesic axis = axis_of(e);
  const Real ell = translation_length(e);
  const MobiusMap to_axis = canonical_map(axis);
  const MobiusMap gens[4] = {frame.genA, frame.genB, inverse(frame.genA), inverse(frame.genB)};
  const Geodesic* lines[3] = {&frame.lineL, &frame.lineLA, &frame.lineLB};
  const Real eps_ang = tolerances().angle;
  std::vector<Real> params;

  // Depth-first over reduced words; cw is to_axis * W.
  const auto visit = [&](auto&& self, const MobiusMap& cw, int depth, int last) -> void {
    for (const Geodesic* y : lines) {
      const BoundaryPoint pu = apply(cw, y->e1());
      const BoundaryPoint pv = apply(cw, y->e2());
      if (pu.is_infinite() || pv.is_infinite()) continue;
      const Real u = pu.value().real(), v = pv.value().real();
      if (!(u * v < 0)) continue;
      const Real angle = atan2(sqrt(-u * v), (v > u ? 1 : -1) * (u + v) / 2);
      if (fabs(angle - kPi / 2) < eps_ang) continue;
      const Real s = log(-u * v) / 2;
      params.push_back(s - ell * floor(s / ell));
    }
    if (depth == word_cap) return;
    for (int g = 0; g < 4; ++g)
      if (last < 0 || g != (last ^ 2)) self(self, cw * gens[g], depth + 1, g);
  };
  visit(visit, to_axis, 0, -1);

  std::sort(params.begin(), params.end());
  const Real tol = Real(1e-6) * std::max(Real(1), ell);
  std::vector<Real> distinct;
  for (const Real& s : params)
    if (distinct.empty() || s - distinct.back() > tol) distinct.push_back(s);
  if (distinct.size() > 1 && distinct.front() + ell - distinct.back() <= tol) distinct.pop_back();
  return static_cast<int>(distinct.size());
}

const char* to_string(LoopTag t) {
  return t == LoopTag::around_gamma0 ? "around-gamma0" : "around-gamma-inf";
}

LoopDecomposition loop_decomposition(const GroupFrame& frame, const EsiSet& esi) {
  const Labeling lab = make_labeling(frame, esi.label);
  if (esi.records.size() != static_cast<std::size_t>(2 * lab.n + 1) ||
      esi.right_anchor != lab.right_anchor ||
      !same_geodesic(esi.axis, lab.axis, tolerances().fixed_point) ||
      !same_geodesic(esi.records.front().line, labeled_line(frame, lab, lab.first_index()).line,
                     tolerances().fixed_point))
    throw std::invalid_argument("ESI set was computed for a different frame or label");

  const auto rec = [&](long j) -> const EsiRecord& {
    return esi.records[static_cast<std::size_t>(j - lab.first_index())];
  };
  const long period = 2 * lab.n;
  const auto wrap = [&](long j) {
    long r = (j - lab.first_index()) % period;
    if (r < 0) r += period;
    return lab.first_index() + r;
  };

  LoopDecomposition d;
  for (long j = lab.first_index(); j < lab.last_index(); ++j) {
    if (rec(j).base != Seam::L) continue;
    const Seam other = rec(j + 1).base;
    if (other == Seam::L) throw InvariantViolation("consecutive L crossings");
    // Mirror of segment [j, j+1] is [mirror(j+1), mirror(j)], taken mod the period.
    const long ms = wrap(lab.mirror(j + 1));
    const long me = ms + 1;
    if (rec(ms).base != other || rec(me).base != Seam::L)
      throw InvariantViolation("mirror segment touches different seams");
    const LoopTag tag = other == Seam::LA ? LoopTag::around_gamma0 : LoopTag::around_gamma_inf;
    d.loops.push_back(tag);
    d.segments.push_back({j, j + 1, ms, me});
    (tag == LoopTag::around_gamma0 ? d.count_zero : d.count_inf) += 1;
  }
  return d;
}

std::vector<int> cyclic_runs(const std::vector<LoopTag>& tags) {
  const std::size_t n = tags.size();
  if (n == 0) return {};
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i)
    if (tags[i] != tags[(i + n - 1) % n]) {
      start = i;
      break;
    }
  if (start == n) return {static_cast<int>(n)};
  std::vector<int> runs;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = (start + k) % n;
    if (k == 0 || tags[i] != tags[(i + n - 1) % n])
      runs.push_back(1);
    else
      ++runs.back();
  }
  return runs;
}

namespace {

// Letters: true counts toward p (around-gamma-inf), false toward q.
std::vector<long> decode(const std::vector<bool>& w) {
  const long p = std::count(w.begin(), w.end(), true);
  const long q = static_cast<long>(w.size()) - p;
  if (q == 0) throw InvariantViolation("tag word has no around-gamma0 loop");
  if (p == 0) {
    if (q != 1) throw InvariantViolation("tag word is a proper power");
    return {0};
  }
  if (p < q) {
    std::vector<bool> flipped(w);
    flipped.flip();
    std::vector<long> rest = decode(flipped);
    rest.insert(rest.begin(), 0);
    return rest;
  }
  // Rotate to the start of a run of the majority letter.
  const std::size_t n = w.size();
  std::size_t start = 0;
  while (!(w[start] && !w[(start + n - 1) % n])) ++start;
  std::vector<int> runs;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = (start + k) % n;
    if (!w[i]) {
      if (!w[(i + 1) % n]) throw InvariantViolation("minority letters adjacent in tag word");
      continue;
    }
    if (k == 0 || !w[(i + n - 1) % n]) runs.push_back(0);
    ++runs.back();
  }
  const int a0 = *std::min_element(runs.begin(), runs.end());
  std::vector<bool> next;
  for (int r : runs) {
    if (r != a0 && r != a0 + 1) throw InvariantViolation("run lengths differ by more than one");
    if (r == a0 + 1) next.push_back(true);
    next.push_back(false);
  }
  std::vector<long> rest = decode(next);
  rest.front() = a0;
  return rest;
}

}  // namespace

std::vector<long> continued_fraction_from_tags(const std::vector<LoopTag>& tags) {
  std::vector<bool> w;
  for (LoopTag t : tags) w.push_back(t == LoopTag::around_gamma_inf);
  return decode(w);
}

WindingPattern winding_pattern(const RationalLabel& x, const LoopDecomposition& d) {
  WindingPattern wp;
  wp.runs = cyclic_runs(d.loops);
  if (x.q == 0) return wp;  // 1/0 has no continued fraction
  wp.decoded = continued_fraction_from_tags(d.loops);
  wp.expected = continued_fraction(x);
  return wp;
}

}  // namespace hypesi
