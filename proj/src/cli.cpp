#include "hypesi/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "hypesi/config.hpp"
#include "hypesi/connector.hpp"
#include "hypesi/records.hpp"
#include "hypesi/svg.hpp"

namespace hypesi {

namespace {

struct Options {
  std::string label;
  std::string group;
  std::string output;
  long max_sum = 8;
  int steps = 10;
  int word_length = 8;
  int sample_cap = 20000;
  int threads = 0;
  double tol = 0;
};

GroupFrame planar_frame(const GroupSpec& g) { return build_frame(g.a, g.b); }

GroupFrame deformed_frame(const GroupSpec& g) {
  const auto gens = g.generators();
  return build_frame(gens.first, gens.second);
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  RecordTable t;
  t.header = {"label", "p", "q", "word", "length", "palindrome", "first", "second"};
  for (const RationalLabel& x : labels_up_to(o.max_sum)) {
    const PrimitiveWord w = primitive_word(x);
    t.rows.push_back({x.str(), std::to_string(x.p), std::to_string(x.q), w.letters,
                      std::to_string(w.length()), w.palindrome() ? "yes" : "no",
                      w.first.empty() ? "-" : w.first, w.second.empty() ? "-" : w.second});
  }
  t.write(out);
  return 0;
}

int cmd_word(const Options& o, std::ostream& out) {
  out << primitive_word(RationalLabel::parse(o.label)).letters << '\n';
  return 0;
}

int cmd_esi(const Options& o, std::ostream& out) {
  const GroupSpec g = load_group_config(o.group);
  const EsiSet set = esi_points(planar_frame(g), RationalLabel::parse(o.label));
  esi_table(set).write(out);
  return set.essential_count == EsiSet::expected_essential(set.label) ? 0 : 1;
}

int cmd_connectors(const Options& o, std::ostream& out) {
  const GroupSpec g = load_group_config(o.group);
  const RationalLabel x = RationalLabel::parse(o.label);
  const ConnectorSet set = connectors(deformed_frame(g), x);
  connector_table(set).write(out);
  const long n = x.sum();
  const bool ok = set.marked_points() == 2 * (n - 1) && set.quotient_connectors() == n - 1 &&
                  set.loops.count() == n;
  return ok ? 0 : 1;
}

int cmd_check_model(const Options& o, std::ostream& out) {
  const GroupFrame f = planar_frame(load_group_config(o.group));
  const ModelGroupReport rep = validate_model_group(f);
  const auto res = hexagon_residuals(f);
  RecordTable t;
  t.header = {"side", "perp_residual"};
  for (std::size_t i = 0; i < res.size(); ++i)
    t.rows.push_back({std::to_string(i), format_real(res[i])});
  t.summaries.push_back({{"axesDisjoint", rep.axes_disjoint ? "true" : "false"},
                         {"hexagonConvex", rep.hexagon_convex ? "true" : "false"},
                         {"allHyperbolic", rep.all_hyperbolic ? "true" : "false"},
                         {"verdict", rep.verdict ? "certified" : "rejected"}});
  t.write(out);
  return rep.verdict ? 0 : 1;
}

int cmd_check_winding(const Options& o, std::ostream& out) {
  const GroupFrame f = deformed_frame(load_group_config(o.group));
  const WindingReport rep = winding_group_check(f, o.word_length, o.sample_cap);
  RecordTable t;
  t.header = {"axis", "support_found", "margin"};
  const char* names[3] = {"A", "B", "A^-1B"};
  for (int i = 0; i < 3; ++i)
    t.rows.push_back({names[i], rep.support_found[i] ? "true" : "false", format_real(rep.margin[i])});
  t.summaries.push_back({{"samples", std::to_string(rep.sample_count)},
                         {"wordLength", std::to_string(o.word_length)},
                         {"verdict", rep.verdict ? "winding" : "not-winding"}});
  t.write(out);
  return rep.verdict ? 0 : 1;
}

int cmd_plot(const Options& o, std::ostream& out) {
  const GroupSpec g = load_group_config(o.group);
  const GroupFrame f = planar_frame(g);
  const std::string svg = render_svg(esi_scene(f, esi_points(f, RationalLabel::parse(o.label))));
  if (o.output.empty() || o.output == "-") {
    out << svg;
    return 0;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw ConfigError("cannot write " + o.output);
  file << svg;
  return 0;
}

struct VerifyRow {
  std::vector<std::string> fields;
  bool ok = true;
};

VerifyRow verify_label(const GroupFrame& planar, bool model, const GroupFrame& deformed,
                       const RationalLabel& x) {
  const Tolerances& tol = tolerances();
  VerifyRow row;
  std::vector<std::string> notes;
  const auto fail = [&](const std::string& what) {
    row.ok = false;
    notes.push_back(what);
  };
  const long n = x.sum();
  std::string essential = "-", quotient = "-", brute = "-", cf = "-";
  std::string marks = "-", conn = "-", loops = "-", tags = "-";
  try {
    const PrimitiveWord w = primitive_word(x);
    if (w.palindrome() != (n % 2 == 1)) fail("palindromicity");
    const long na = std::count(w.letters.begin(), w.letters.end(), 'A');
    if (na != x.q || static_cast<long>(w.length()) - na != x.p) fail("letter counts");

    if (model) {
      const EsiSet esi = esi_points(planar, x);
      essential = std::to_string(esi.essential_count);
      quotient = std::to_string(esi.quotient_count);
      if (esi.essential_count != EsiSet::expected_essential(x)) fail("essential count");
      if (esi.quotient_count != n - 1) fail("quotient count");
      if (esi.mirror_residual > tol.perp) fail("mirror residual");
      if (x.even() && esi.shared_crossing_residual > tol.perp) fail("shared crossing");
      if (n <= 8) {
        const int b = brute_force_esi_count(planar, x, static_cast<int>(n + 2));
        brute = std::to_string(b);
        if (b != esi.essential_count) fail("brute-force count");
      }
      if (x.q > 0) {
        const WindingPattern wp = winding_pattern(x, loop_decomposition(planar, esi));
        cf = wp.matches() ? "match" : "mismatch";
        if (!wp.matches()) fail("winding pattern");
      }
    }

    const ConnectorSet cs = connectors(deformed, x);
    marks = std::to_string(cs.marked_points());
    conn = std::to_string(cs.quotient_connectors());
    loops = std::to_string(cs.loops.count());
    tags = std::to_string(cs.loops.count_inf) + "," + std::to_string(cs.loops.count_zero);
    if (cs.marked_points() != 2 * (n - 1)) fail("marked points");
    if (cs.quotient_connectors() != n - 1) fail("quotient connectors");
    if (cs.loops.count() != n) fail("loop count");
    if (cs.loops.count_inf != x.p || cs.loops.count_zero != x.q) fail("loop tags");
  } catch (const std::exception& e) {
    fail(e.what());
  }
  std::string status = "pass";
  if (!row.ok) {
    status = "FAIL:";
    for (const auto& s : notes) status += " " + s + ";";
  }
  row.fields = {x.str(),  std::to_string(2 * (n - 1)), essential, quotient, brute, cf, marks, conn,
                loops,    tags,                        status};
  return row;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const GroupSpec g = load_group_config(o.group);
  const GroupFrame planar = planar_frame(g);
  const GroupFrame deformed = deformed_frame(g);
  bool model = false;
  if (planar.planar()) model = validate_model_group(planar).verdict;

  bool hexagon_ok = true;
  for (const Real& r : hexagon_residuals(deformed)) hexagon_ok = hexagon_ok && r < tolerances().perp;

  const std::vector<RationalLabel> labels = labels_up_to(o.max_sum, false);
  std::vector<VerifyRow> rows(labels.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < labels.size(); i = next++)
      rows[i] = verify_label(planar, model, deformed, labels[i]);
  };
  unsigned nthreads = o.threads > 0 ? static_cast<unsigned>(o.threads)
                                    : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min<unsigned>(nthreads, static_cast<unsigned>(labels.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  RecordTable t;
  t.header = {"label", "expected", "essential", "quotient", "brute", "cf",
              "marks", "connectors", "loops", "tags_inf_zero", "status"};
  int failures = hexagon_ok ? 0 : 1;
  for (auto& r : rows) {
    if (!r.ok) ++failures;
    t.rows.push_back(std::move(r.fields));
  }
  t.summaries.push_back({{"labels", std::to_string(labels.size())},
                         {"modelGroup", model ? "certified" : "not-certified"},
                         {"hexagon", hexagon_ok ? "pass" : "fail"},
                         {"failures", std::to_string(failures)}});
  t.write(out);
  return failures == 0 ? 0 : 1;
}

int cmd_deform(const Options& o, std::ostream& out) {
  const GroupSpec g = load_group_config(o.group);
  if (g.deformation.family.empty() || g.deformation.angle == 0)
    throw ConfigError("deform needs a group config with a nonzero deformation");
  std::vector<RationalLabel> labels;
  if (o.label.empty())
    labels = labels_up_to(o.max_sum, false);
  else
    labels.push_back(RationalLabel::parse(o.label));

  const Real limit = Real(1e-7);
  RecordTable t;
  t.header = {"label", "step", "angle", "max_separation", "marks", "loops"};
  bool ok = true;
  Real worst_sep = 0, worst_q = 0;
  for (const RationalLabel& x : labels) {
    const ContinuityReport rep = deformation_continuity(g.a, g.b, g.deformation.angle, x, o.steps);
    for (std::size_t k = 0; k < rep.steps.size(); ++k) {
      const ContinuityStep& s = rep.steps[k];
      t.rows.push_back({x.str(), std::to_string(k), format_real(s.angle),
                        format_real(s.max_separation), std::to_string(s.marked_points),
                        std::to_string(s.loops)});
    }
    ok = ok && rep.monotone && rep.endpoint_separation < limit && rep.endpoint_q_distance < limit;
    worst_sep = std::max(worst_sep, rep.endpoint_separation);
    worst_q = std::max(worst_q, rep.endpoint_q_distance);
  }
  t.summaries.push_back({{"labels", std::to_string(labels.size())},
                         {"steps", std::to_string(o.steps)},
                         {"endpointSeparation", format_real(worst_sep)},
                         {"endpointQDistance", format_real(worst_q)},
                         {"verdict", ok ? "pass" : "fail"}});
  t.write(out);
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Essential self-intersections of primitive geodesics", "hypesi"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--tol", o.tol, "Base tolerance (overrides HYPESI_TOL)")->check(CLI::PositiveNumber);

  const auto label_opt = [&](CLI::App* c, bool required = true) {
    auto* opt = c->add_option("label", o.label, "Label p/q");
    if (required) opt->required();
  };
  const auto group_opt = [&](CLI::App* c) {
    c->add_option("--group,-g", o.group, "Group config (JSON)")->required();
  };

  auto* enumerate = app.add_subcommand("enumerate", "List primitive words by label");
  enumerate->add_option("--max-sum", o.max_sum, "Largest p+q")->check(CLI::PositiveNumber);
  auto* word = app.add_subcommand("word", "Print the primitive word of a label");
  label_opt(word);
  auto* esi = app.add_subcommand("esi", "ESI records on a planar model group");
  label_opt(esi);
  group_opt(esi);
  auto* conn = app.add_subcommand("connectors", "Connector records on a (deformed) group");
  label_opt(conn);
  group_opt(conn);
  auto* model = app.add_subcommand("check-model", "Validate a planar model group");
  group_opt(model);
  auto* winding = app.add_subcommand("check-winding", "Winding-group heuristic");
  group_opt(winding);
  winding->add_option("--word-length", o.word_length, "Sample word length")->check(CLI::PositiveNumber);
  winding->add_option("--sample-cap", o.sample_cap, "Sample cap")->check(CLI::PositiveNumber);
  auto* plot = app.add_subcommand("plot", "Upper half-plane SVG of the ESI picture");
  label_opt(plot);
  group_opt(plot);
  plot->add_option("-o,--output", o.output, "Output file (default stdout)");
  auto* verify = app.add_subcommand("verify", "Check every label up to a given p+q");
  group_opt(verify);
  verify->add_option("--max-sum", o.max_sum, "Largest p+q")->check(CLI::Range(2L, 40L));
  verify->add_option("--threads", o.threads, "Worker threads (default: hardware)");
  auto* deform = app.add_subcommand("deform", "Connector continuity along the deformation path");
  label_opt(deform, false);
  group_opt(deform);
  deform->add_option("--steps", o.steps, "Interpolation steps")->check(CLI::PositiveNumber);
  deform->add_option("--max-sum", o.max_sum, "Largest p+q when no label is given");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Tolerances saved = tolerances();
  try {
    if (o.tol > 0) {
      set_tolerances(Tolerances::from_base(o.tol));
    } else if (const char* env = std::getenv("HYPESI_TOL")) {
      char* end = nullptr;
      const double base = std::strtod(env, &end);
      if (end == env || *end != '\0' || !(base > 0)) throw ConfigError("bad HYPESI_TOL value");
      set_tolerances(Tolerances::from_base(base));
    }
    int code = 2;
    if (*enumerate) code = cmd_enumerate(o, out);
    else if (*word) code = cmd_word(o, out);
    else if (*esi) code = cmd_esi(o, out);
    else if (*conn) code = cmd_connectors(o, out);
    else if (*model) code = cmd_check_model(o, out);
    else if (*winding) code = cmd_check_winding(o, out);
    else if (*plot) code = cmd_plot(o, out);
    else if (*verify) code = cmd_verify(o, out);
    else if (*deform) code = cmd_deform(o, out);
    set_tolerances(saved);
    return code;
  } catch (const InvariantViolation& e) {
    set_tolerances(saved);
    err << "invariant violation: " << e.what() << '\n';
    return 1;
  } catch (const ConfigError& e) {
    set_tolerances(saved);
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    set_tolerances(saved);
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace hypesi
