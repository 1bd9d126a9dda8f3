#include "hypesi/connector.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "hypesi/config.hpp"
#include "hypesi/words.hpp"

namespace hypesi {

using boost::multiprecision::fabs;
using boost::multiprecision::floor;

namespace {

constexpr int kSpotCheckLength = 6;

void require_loxodromic_words(const GroupFrame& frame, int max_len) {
  const MobiusMap gens[4] = {frame.genA, frame.genB, inverse(frame.genA), inverse(frame.genB)};
  const char letters[4] = {'A', 'B', 'a', 'b'};
  std::string word;
  const auto visit = [&](auto&& self, const MobiusMap& w, int last) -> void {
    if (!word.empty() && word.front() != (word.back() ^ 0x20)) {
      const IsometryClass c = classify(w);
      if (c != IsometryClass::hyperbolic && c != IsometryClass::loxodromic_nonreal)
        throw GeometryError("group is not purely loxodromic: " + word + " is " + to_string(c));
    }
    if (static_cast<int>(word.size()) == max_len) return;
    for (int g = 0; g < 4; ++g) {
      if (last >= 0 && g == (last ^ 2)) continue;
      word.push_back(letters[g]);
      self(self, w * gens[g], g);
      word.pop_back();
    }
  };
  visit(visit, MobiusMap(), -1);
}

bool shares_endpoint(const Geodesic& g1, const Geodesic& g2) {
  const Real tol = tolerances().fixed_point;
  return chordal_distance(g1.e1(), g2.e1()) <= tol || chordal_distance(g1.e1(), g2.e2()) <= tol ||
         chordal_distance(g1.e2(), g2.e1()) <= tol || chordal_distance(g1.e2(), g2.e2()) <= tol;
}

SpacePoint lift(const PlanePoint& p) { return SpacePoint{Complex(p.z.real()), p.z.imag()}; }

// Signed distance from a to b going forward around a circle of length ell.
Real forward_gap(const Real& a, const Real& b, const Real& ell) {
  Real d = b - a;
  return d - ell * floor(d / ell);
}

Real cyclic_distance(const Real& a, const Real& b, const Real& ell) {
  const Real d = forward_gap(a, b, ell);
  return std::min(d, ell - d);
}

}  // namespace

std::vector<GeneralizedPair> generalized_esi_pairs(const GroupFrame& frame, const RationalLabel& x) {
  const Labeling lab = make_labeling(frame, x);
  require_loxodromic_words(frame, static_cast<int>(std::min<long>(lab.n, kSpotCheckLength)));
  std::vector<GeneralizedPair> out;
  for (long j = lab.first_index(); j < lab.last_index(); ++j) {
    LabeledLine ll = labeled_line(frame, lab, j);
    if (shares_endpoint(ll.line, lab.axis))
      throw GeometryError("degenerate pair at index " + std::to_string(j) + " of " + x.str());
    out.push_back({j, ll.conjugator, ll.base, ll.line, lab.axis, lab.combinatorial_right(j)});
  }
  return out;
}

const ConnectorRecord& ConnectorSet::record(long j) const {
  for (const ConnectorRecord& r : records)
    if (r.index == j) return r;
  throw std::out_of_range("no connector record with index " + std::to_string(j));
}

ConnectorSet connectors(const GroupFrame& frame, const RationalLabel& x) {
  const std::vector<GeneralizedPair> pairs = generalized_esi_pairs(frame, x);
  const Labeling lab = make_labeling(frame, x);
  const AxisCoordinate coord(lab.axis);
  const Real ell = lab.translation_length;
  const Tolerances& tol = tolerances();

  ConnectorSet cs{x, lab.axis, ell, lab.right_anchor, lab.n, {}, 0, 0, Seam::L, Seam::L, {}, {}, 0, 0, {}};

  const Real s0 = coord.at(pairs.front().line);
  const auto reduce = [&](const Real& s) { return s0 + forward_gap(s0, s, ell); };
  const long period = 2 * lab.n;
  const auto wrap = [&](long j) {
    long r = (j - lab.first_index()) % period;
    if (r < 0) r += period;
    return lab.first_index() + r;
  };
  const auto overflow = [&](const char* what, long j) {
    throw InvariantViolation(std::string("residual overflow (") + what + ") at index " +
                             std::to_string(j) + " of " + x.str());
  };

  const MobiusMap hr = half_turn_about(labeled_line(frame, lab, lab.right_anchor).line);
  for (const GeneralizedPair& p : pairs) {
    if (p.right_angle) {
      const Real s = reduce(coord.at(p.line));
      if (p.index == lab.right_anchor) {
        cs.anchor_param = s;
        cs.anchor_base = p.base;
      } else {
        cs.opposite_param = s;
        cs.opposite_base = p.base;
      }
      continue;
    }
    const MobiusMap h = half_turn_about(p.line);
    const Geodesic orth = common_perpendicular(p.line, p.axis);
    const Real s = coord.at(p.line);
    const SpacePoint foot = coord.point(s);
    const SpacePoint partner_foot = apply(h, foot);
    const Geodesic partner_axis = image(h, p.axis);
    // H_R H_{L_j} lies in the group and takes the partner axis back to Ax_E.
    const MobiusMap back = hr * h;

    ConnectorRecord r{p.index, p.conjugator, p.base, p.line, p.axis, orth, partner_axis,
                      reduce(s), reduce(coord.at(apply(back, partner_foot))),
                      hyperbolic_distance(foot, partner_foot),
                      perpendicularity_residual(orth, p.line),
                      perpendicularity_residual(orth, p.axis),
                      geodesic_distance(image(h, orth), orth),
                      geodesic_distance(common_perpendicular(p.line, partner_axis), orth)};
    if (r.perp_line > tol.perp || r.perp_axis > tol.perp) overflow("perpendicularity", p.index);
    if (r.half_turn_residual > tol.fixed_point) overflow("half-turn invariance", p.index);
    if (r.partner_residual > tol.fixed_point) overflow("partner axis", p.index);
    cs.records.push_back(r);
  }

  for (const ConnectorRecord& r : cs.records)
    cs.marks.push_back({r.index, r.foot_on_axis, wrap(lab.mirror(r.index))});
  std::sort(cs.marks.begin(), cs.marks.end(),
            [](const Mark& a, const Mark& b) { return a.param < b.param; });

  for (const ConnectorRecord& r : cs.records) {
    const long jm = lab.mirror(r.index);
    const long partner = wrap(jm);
    const ConnectorRecord& other = cs.record(partner);
    cs.partner_foot_residual = std::max(
        cs.partner_foot_residual, cyclic_distance(r.foot_on_partner_axis, other.foot_on_axis, ell));
    if (r.index >= partner) continue;
    cs.pairs.emplace_back(r.index, partner);
    // O_{j'} = E^k H_R H_{L_j} (O_j) with j' = mirror(j) + 2Nk.
    const long k = (partner - jm) / period;
    MobiusMap v = hr * half_turn_about(r.line);
    const MobiusMap step = k >= 0 ? lab.e : inverse(lab.e);
    for (long i = 0; i < (k >= 0 ? k : -k); ++i) v = step * v;
    cs.pairing_residual =
        std::max(cs.pairing_residual, geodesic_distance(image(v, r.orthogonal), other.orthogonal));
  }
  if (cs.pairing_residual > tol.fixed_point) overflow("connector pairing", cs.pairs.front().first);
  if (cs.partner_foot_residual > tol.fixed_point * std::max(Real(1), ell))
    overflow("partner foot", cs.records.front().index);

  cs.loops = loop_count(cs);
  return cs;
}

LoopReport loop_count(const ConnectorSet& set) {
  LoopReport rep;
  const auto tag_of = [](Seam s) {
    if (s == Seam::L) throw InvariantViolation("loop touches only L");
    return s == Seam::LA ? LoopTag::around_gamma0 : LoopTag::around_gamma_inf;
  };
  const auto add = [&](LoopTag t, std::vector<std::pair<long, long>> g) {
    rep.tags.push_back(t);
    rep.gaps.push_back(std::move(g));
    (t == LoopTag::around_gamma0 ? rep.count_zero : rep.count_inf) += 1;
  };
  if (set.marks.empty()) {
    // No connectors: the geodesic itself, running between its two perpendicular feet.
    add(tag_of(set.anchor_base == Seam::L ? set.opposite_base : set.anchor_base), {});
    return rep;
  }

  const Real ell = set.translation_length;
  const Real tie = tolerances().fixed_point * std::max(Real(1), ell);
  const std::size_t m = set.marks.size();
  std::vector<Real> points;
  for (const Mark& k : set.marks) points.push_back(k.param);
  points.push_back(set.anchor_param);
  points.push_back(set.opposite_param);
  std::sort(points.begin(), points.end());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Real gap = forward_gap(points[i], points[(i + 1) % points.size()], ell);
    if (gap <= tie || ell - gap <= tie) throw InvariantViolation("mark-ordering failure");
  }

  std::map<long, std::size_t> gap_from;
  for (std::size_t i = 0; i < m; ++i) gap_from[set.marks[i].index] = i;

  std::vector<bool> used(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (used[i]) continue;
    const Mark& a = set.marks[i];
    const Mark& b = set.marks[(i + 1) % m];
    const Real width = forward_gap(a.param, b.param, ell);
    std::set<Seam> touched{set.record(a.index).base, set.record(b.index).base};
    if (forward_gap(a.param, set.anchor_param, ell) < width) touched.insert(set.anchor_base);
    if (forward_gap(a.param, set.opposite_param, ell) < width) touched.insert(set.opposite_base);
    if (touched.size() != 2 || !touched.count(Seam::L))
      throw InvariantViolation("loop from mark " + std::to_string(a.index) +
                               " does not touch exactly two seams");
    const Seam other = *touched.rbegin();

    // The mirror image of gap (a, b) runs from partner(b) to partner(a).
    const auto it = gap_from.find(b.partner);
    if (it == gap_from.end() || set.marks[(it->second + 1) % m].index != a.partner)
      throw InvariantViolation("mirror of the gap at mark " + std::to_string(a.index) +
                               " is not a gap");
    used[i] = true;
    std::vector<std::pair<long, long>> gaps{{a.index, b.index}};
    if (it->second != i) {
      used[it->second] = true;
      gaps.emplace_back(b.partner, a.partner);
    }
    add(tag_of(other), std::move(gaps));
  }
  return rep;
}

bool transversal_check(const GroupFrame& frame, const Geodesic& candidate, const RationalLabel& x,
                       int word_cap) {
  const Tolerances& tol = tolerances();
  const Labeling lab = make_labeling(frame, x);
  if (word_cap < 0) word_cap = static_cast<int>(x.sum());
  SpacePoint foot;
  try {
    if (perpendicularity_residual(lab.axis, candidate) > tol.perp) return false;
    const AxisCoordinate coord(lab.axis);
    foot = coord.point(coord.at(candidate));
  } catch (const GeometryError&) {
    return false;
  }

  const MobiusMap gens[4] = {frame.genA, frame.genB, inverse(frame.genA), inverse(frame.genB)};
  const Seam seams[3] = {Seam::L, Seam::LA, Seam::LB};
  const auto visit = [&](auto&& self, const MobiusMap& w, int depth, int last) -> bool {
    for (Seam y : seams) {
      const MobiusMap h = conjugate(frame.half_turn(y), w);
      if (geodesic_distance(image(h, candidate), candidate) <= tol.perp &&
          hyperbolic_distance(foot, apply(h, foot)) > tol.perp)
        return true;
    }
    if (depth == word_cap) return false;
    for (int g = 0; g < 4; ++g)
      if ((last < 0 || g != (last ^ 2)) && self(self, w * gens[g], depth + 1, g)) return true;
    return false;
  };
  return visit(visit, MobiusMap(), 0, -1);
}

ContinuityReport deformation_continuity(const MobiusMap& a, const MobiusMap& b,
                                        const Real& start, const RationalLabel& x, int steps) {
  if (steps < 1) throw std::invalid_argument("steps must be positive");
  ContinuityReport rep;
  std::map<long, Real> previous;
  const Real slack = tolerances().fixed_point;
  std::optional<ConnectorSet> last;
  std::optional<GroupFrame> last_frame;
  for (int k = 0; k <= steps; ++k) {
    const Real angle = k == steps ? Real(0) : start * Real(steps - k) / steps;
    const auto gens = deform(a, b, Deformation{"twist-about-L", angle});
    last_frame = build_frame(gens.first, gens.second);
    last = connectors(*last_frame, x);
    ContinuityStep st{angle, 0, last->marked_points(), last->loops.count()};
    for (const ConnectorRecord& r : last->records) {
      st.max_separation = std::max(st.max_separation, r.foot_separation);
      const auto it = previous.find(r.index);
      if (it != previous.end() && r.foot_separation > it->second + slack) rep.monotone = false;
      previous[r.index] = r.foot_separation;
    }
    rep.steps.push_back(st);
  }
  rep.endpoint_separation = rep.steps.back().max_separation;
  const EsiSet esi = esi_points(*last_frame, x);
  for (const ConnectorRecord& r : last->records) {
    const auto q = std::find_if(esi.records.begin(), esi.records.end(),
                                [&](const EsiRecord& e) { return e.index == r.index; });
    if (q == esi.records.end()) throw InvariantViolation("connector without planar crossing");
    rep.endpoint_q_distance =
        std::max(rep.endpoint_q_distance, point_geodesic_distance(lift(q->point), r.orthogonal));
  }
  return rep;
}

}  // namespace hypesi
