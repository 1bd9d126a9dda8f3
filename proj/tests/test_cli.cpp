#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "generators.hpp"
#include "hypesi/cli.hpp"
#include "hypesi/config.hpp"
#include "hypesi/records.hpp"
#include "hypesi/svg.hpp"

using namespace hypesi;

namespace {

const std::string kConfigs = HYPESI_CONFIG_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

const GroupFrame& reference() {
  static const GroupFrame f = [] {
    const GroupSpec g = load_group_config(kConfigs + "/reference.json");
    return build_frame(g.a, g.b);
  }();
  return f;
}

}  // namespace

TEST_CASE("word prints the palindrome") {
  const Result r = call({"word", "1/2"});
  CHECK(r.code == 0);
  CHECK(r.out == "ABA\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"esi", "1/2"}).code == 2);
  CHECK(call({"word", "-1/2"}).code == 2);
  CHECK(call({"esi", "1/2", "--group", kConfigs + "/missing.json"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("esi on a group that fails validation exits with 2") {
  const Result r = call({"esi", "5/3", "--group", kConfigs + "/bad.json"});
  CHECK(r.code == 2);
  CHECK(r.err.find("not a certified model group") != std::string::npos);
}

TEST_CASE("invariant violations exit with 1") {
  // A right-angle tolerance of 10 radians marks every crossing as a right angle.
  const Result r = call({"--tol", "0.1", "esi", "1/2", "--group", kConfigs + "/reference.json"});
  CHECK(r.code == 1);
  CHECK(r.err.find("invariant violation") != std::string::npos);
  CHECK(tolerances().angle == Real(1e-7));
}

TEST_CASE("HYPESI_TOL is read and validated") {
  setenv("HYPESI_TOL", "garbage", 1);
  CHECK(call({"esi", "1/2", "--group", kConfigs + "/reference.json"}).code == 2);
  setenv("HYPESI_TOL", "1e-9", 1);
  CHECK(call({"esi", "1/2", "--group", kConfigs + "/reference.json"}).code == 0);
  setenv("HYPESI_TOL", "0.1", 1);
  CHECK(call({"esi", "1/2", "--group", kConfigs + "/reference.json"}).code == 1);
  unsetenv("HYPESI_TOL");
}

TEST_CASE("verify over the reference group") {
  const Result r = call({"verify", "--max-sum", "8", "--group", kConfigs + "/reference.json"});
  CHECK(r.code == 0);
  const ParsedRecords p = parse_records(r.out);
  REQUIRE(p.summaries.size() == 1);
  CHECK(p.summaries[0].at("failures") == "0");
  CHECK(p.summaries[0].at("modelGroup") == "certified");
  CHECK(p.rows.size() == labels_up_to(8, false).size());
  for (const auto& row : p.rows) {
    CHECK(row.at("essential") == row.at("expected"));
    CHECK(row.at("brute") == row.at("expected"));
    CHECK(row.at("status") == "pass");
  }
}

TEST_CASE("verify on the twisted group checks connectors") {
  const Result r = call({"verify", "--max-sum", "6", "--group", kConfigs + "/twist.json", "--threads", "2"});
  CHECK(r.code == 0);
  const ParsedRecords p = parse_records(r.out);
  for (const auto& row : p.rows) {
    const RationalLabel x = RationalLabel::parse(row.at("label"));
    CHECK(std::stol(row.at("loops")) == x.sum());
    CHECK(std::stol(row.at("marks")) == 2 * (x.sum() - 1));
  }
}

TEST_CASE("checks and continuity") {
  CHECK(call({"check-model", "--group", kConfigs + "/reference.json"}).code == 0);
  CHECK(call({"check-model", "--group", kConfigs + "/bad.json"}).code == 1);
  CHECK(call({"check-model", "--group", kConfigs + "/twist.json"}).code == 0);
  const Result w = call({"check-winding", "--group", kConfigs + "/twist.json"});
  CHECK(w.code == 0);
  CHECK(parse_records(w.out).summaries[0].at("verdict") == "winding");
  const Result d = call({"deform", "3/2", "--steps", "10", "--group", kConfigs + "/twist.json"});
  CHECK(d.code == 0);
  CHECK(parse_records(d.out).rows.size() == 11);
  CHECK(call({"deform", "3/2", "--group", kConfigs + "/reference.json"}).code == 2);
}

TEST_CASE("connector records") {
  const Result r = call({"connectors", "2/3", "--group", kConfigs + "/twist.json"});
  CHECK(r.code == 0);
  const ParsedRecords p = parse_records(r.out);
  CHECK(p.rows.size() == 8);
  const auto& s = p.summaries.at(0);
  CHECK(s.at("markedPoints") == "8");
  CHECK(s.at("quotientConnectors") == "4");
  CHECK(s.at("loopCount") == "5");
  CHECK(s.at("aroundGammaInf") == "2");
  CHECK(s.at("aroundGamma0") == "3");
}

TEST_CASE("property: record output round-trips every number") {
  for (const RationalLabel& x : labels_up_to(7, false)) {
    const EsiSet set = esi_points(reference(), x);
    std::ostringstream os;
    esi_table(set).write(os);
    const ParsedRecords p = parse_records(os.str());
    REQUIRE(p.rows.size() + 1 == set.records.size());
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
      const EsiRecord& r = set.records[i];
      const auto& row = p.rows[i];
      CHECK(std::stol(row.at("index")) == r.index);
      CHECK(parse_real(row.at("angle")) == to_double(r.angle));
      CHECK(parse_real(row.at("param")) == to_double(r.param));
      CHECK(parse_real(row.at("point_re")) == to_double(r.point.z.real()));
      CHECK(parse_real(row.at("point_im")) == to_double(r.point.z.imag()));
      CHECK(parse_real(row.at("line_e1_re")) == to_double(r.line.e1().value().real()));
      CHECK(row.at("status") == (r.right_angle ? "excluded" : "kept"));
    }
    CHECK(std::stoi(p.summaries.at(0).at("essentialCount")) == set.essential_count);
  }
  gen::Rng rng(71);
  for (int i = 0; i < 1000; ++i) {
    const double v = rng.uniform(-1, 1) * std::pow(10.0, rng.integer(-300, 300));
    CHECK(parse_real(format_real(v)) == v);
  }
  CHECK(parse_real(format_real(HUGE_VAL)) == HUGE_VAL);
  CHECK(format_real(-HUGE_VAL) == "-inf");
  CHECK_THROWS(parse_records("a\tb\n1\n"));
}

TEST_CASE("svg rendering") {
  const Scene empty;
  const std::string e = render_svg(empty);
  CHECK(e.rfind("<?xml", 0) == 0);
  CHECK(e.find("</svg>") != std::string::npos);

  const Scene s = esi_scene(reference(), esi_points(reference(), RationalLabel::make(1, 2)));
  const std::string a = render_svg(s);
  CHECK(a == render_svg(s));
  CHECK(count(a, "class=\"kept\"") == 4);
  CHECK(count(a, "class=\"excluded\"") == 2);
  CHECK(count(a, "class=\"hexagon\"") == 1);
  CHECK(count(a, "class=\"axis\"") == 1);

  Scene h3;
  h3.lines.emplace_back(BoundaryPoint(Complex(0, 1)), BoundaryPoint(2.0));
  CHECK_THROWS_WITH(render_svg(h3), "plot is planar-only");

  const Result r = call({"plot", "1/2", "--group", kConfigs + "/reference.json"});
  CHECK(r.code == 0);
  CHECK(r.out == a);
}
