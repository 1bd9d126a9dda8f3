#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "hypesi/config.hpp"
#include "hypesi/esi.hpp"
#include "oracles.hpp"

using namespace hypesi;

namespace {

const std::string kConfigs = HYPESI_CONFIG_DIR;

const GroupFrame& reference() {
  static const GroupFrame f = [] {
    const GroupSpec g = load_group_config(kConfigs + "/reference.json");
    return build_frame(g.a, g.b);
  }();
  return f;
}

RationalLabel L(long p, long q) { return RationalLabel::make(p, q); }

std::vector<LoopTag> tags_of(const std::string& word) {
  std::vector<LoopTag> t;
  for (char ch : word) t.push_back(ch == 'B' ? LoopTag::around_gamma_inf : LoopTag::around_gamma0);
  return t;
}

}  // namespace

TEST_CASE("ESI counts for small labels") {
  const EsiSet s12 = esi_points(reference(), L(1, 2));
  CHECK(s12.essential_count == 4);
  CHECK(s12.quotient_count == 2);
  CHECK(s12.records.size() == 7);

  const EsiSet s11 = esi_points(reference(), L(1, 1));
  CHECK(s11.essential_count == 2);
  CHECK(s11.shared_crossing_residual < Real(1e-8));

  const EsiSet s01 = esi_points(reference(), L(0, 1));
  CHECK(s01.essential_count == 0);
  CHECK(std::all_of(s01.records.begin(), s01.records.end(),
                    [](const EsiRecord& r) { return r.right_angle; }));
}

TEST_CASE("brute-force oracle") {
  CHECK(brute_force_esi_count(reference(), L(1, 2), 6) == 4);
  CHECK(brute_force_esi_count(reference(), L(2, 3), 8) == 8);
  CHECK(brute_force_esi_count(reference(), L(1, 1), 4) == 2);
}

TEST_CASE("non-model groups are refused") {
  const GroupSpec bad = load_group_config(kConfigs + "/bad.json");
  CHECK_THROWS_WITH(esi_points(build_frame(bad.a, bad.b), L(5, 3)), "not a certified model group");
}

TEST_CASE("property: records of every label up to 8") {
  for (const RationalLabel& x : labels_up_to(8, false)) {
    CAPTURE(x.str());
    const EsiSet s = esi_points(reference(), x);
    CHECK(s.essential_count == EsiSet::expected_essential(x));
    CHECK(brute_force_esi_count(reference(), x, static_cast<int>(x.sum() + 2)) == s.essential_count);
    CHECK(s.mirror_residual < Real(1e-20));
    int right = 0;
    for (std::size_t i = 0; i + 1 < s.records.size(); ++i) {
      const EsiRecord& r = s.records[i];
      right += r.right_angle;
      // The recorded point lies on both geodesics.
      const Real t = r.point.z.imag();
      CHECK(t > 0);
      for (const Geodesic* g : {&r.line, &s.axis}) {
        const Real u = g->e1().value().real(), v = g->e2().value().real();
        CHECK(fabs(modulus(r.point.z - Complex((u + v) / 2)) - fabs(v - u) / 2) < Real(1e-25));
      }
      if (!r.right_angle) CHECK(fabs(r.angle - kPi / 2) > Real(1e-7));
    }
    CHECK(right == 2);
  }
}

TEST_CASE("property: counts and angles are conjugation invariant") {
  gen::Rng rng(51);
  for (int i = 0; i < 8; ++i) {
    MobiusMap w;
    for (;;) {
      const Real p(rng.uniform(-2, 2)), q(rng.uniform(-2, 2)), s(rng.uniform(-2, 2)), t(rng.uniform(-2, 2));
      if (p * t - q * s > Real(0.2)) {
        w = MobiusMap::from_entries(Complex(p), Complex(q), Complex(s), Complex(t));
        break;
      }
    }
    const GroupFrame f = build_frame(conjugate(reference().genA, w), conjugate(reference().genB, w));
    const RationalLabel x = L(rng.integer(1, 5), 1);
    const EsiSet a = esi_points(reference(), x);
    const EsiSet b = esi_points(f, x);
    REQUIRE(a.records.size() == b.records.size());
    CHECK(a.essential_count == b.essential_count);
    // Line orientations come from the frame construction, so compare unoriented angles.
    const auto acute = [](const Real& t) { return std::min(t, kPi - t); };
    for (std::size_t k = 0; k < a.records.size(); ++k)
      CHECK(fabs(acute(a.records[k].angle) - acute(b.records[k].angle)) < Real(1e-20));
  }
}

TEST_CASE("loop decomposition") {
  const LoopDecomposition d12 = loop_decomposition(reference(), esi_points(reference(), L(1, 2)));
  CHECK(d12.loops.size() == 3);
  CHECK(d12.count_inf == 1);
  CHECK(d12.count_zero == 2);
  const LoopDecomposition d11 = loop_decomposition(reference(), esi_points(reference(), L(1, 1)));
  CHECK(d11.loops.size() == 2);
  CHECK(d11.count_inf == 1);
  CHECK(d11.count_zero == 1);
  CHECK(loop_decomposition(reference(), esi_points(reference(), L(0, 1))).loops.size() == 1);
  CHECK_THROWS_AS(loop_decomposition(reference(), [] {
                    EsiSet s = esi_points(reference(), L(1, 2));
                    s.label = L(2, 1);
                    return s;
                  }()),
                  std::invalid_argument);
  CHECK(std::string(to_string(LoopTag::around_gamma0)) == "around-gamma0");
}

TEST_CASE("winding pattern calibration") {
  const auto pattern = [](long p, long q) {
    const RationalLabel x = L(p, q);
    return winding_pattern(x, loop_decomposition(reference(), esi_points(reference(), x)));
  };
  CHECK(pattern(1, 1).runs == std::vector<int>{1, 1});
  std::vector<int> r13 = pattern(1, 3).runs;
  std::sort(r13.begin(), r13.end());
  CHECK(r13 == std::vector<int>{1, 3});
  CHECK(pattern(1, 3).matches());
  CHECK(pattern(3, 1).matches());
  CHECK(pattern(1, 3).decoded == std::vector<long>{0, 3});
  CHECK(pattern(3, 1).decoded == std::vector<long>{3});
  CHECK(pattern(2, 3).matches());
}

TEST_CASE("property: tag decoder inverts Christoffel words") {
  for (long p = 1; p <= 30; ++p)
    for (long q = 1; p + q <= 40; ++q) {
      if (oracle::gcd(p, q) != 1) continue;
      CAPTURE(p);
      CAPTURE(q);
      std::vector<LoopTag> tags = tags_of(oracle::christoffel(p, q));
      CHECK(continued_fraction_from_tags(tags) == oracle::euclid(p, q));
      std::rotate(tags.begin(), tags.begin() + static_cast<long>(tags.size()) / 3, tags.end());
      CHECK(continued_fraction_from_tags(tags) == oracle::euclid(p, q));
    }
  CHECK_THROWS_AS(continued_fraction_from_tags(tags_of("AABB")), InvariantViolation);
  CHECK_THROWS_AS(continued_fraction_from_tags(tags_of("BBBABBAAB")), InvariantViolation);
}

TEST_CASE("cyclic runs") {
  CHECK(cyclic_runs(tags_of("ABAA")) == std::vector<int>{1, 3});
  CHECK(cyclic_runs(tags_of("AAA")) == std::vector<int>{3});
  CHECK(cyclic_runs({}).empty());
}
