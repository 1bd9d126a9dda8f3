#include "hypesi/records.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hypesi {

namespace {

void join(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "\t" : "") << fields[i];
  os << '\n';
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, '\t')) out.push_back(field);
  if (!line.empty() && line.back() == '\t') out.emplace_back();
  return out;
}

void push_point(std::vector<std::string>& row, const BoundaryPoint& p) {
  if (p.is_infinite()) {
    row.push_back("inf");
    row.push_back("inf");
  } else {
    row.push_back(format_real(p.value().real()));
    row.push_back(format_real(p.value().imag()));
  }
}

void push_geodesic(std::vector<std::string>& row, const Geodesic& g) {
  push_point(row, g.e1());
  push_point(row, g.e2());
}

void push_geodesic_header(std::vector<std::string>& h, const std::string& name) {
  for (const char* s : {"_e1_re", "_e1_im", "_e2_re", "_e2_im"}) h.push_back(name + s);
}

}  // namespace

void RecordTable::write(std::ostream& os) const {
  join(os, header);
  for (const auto& r : rows) join(os, r);
  for (const auto& s : summaries) {
    std::vector<std::string> fields{"summary"};
    for (const auto& [k, v] : s) fields.push_back(k + "=" + v);
    join(os, fields);
  }
}

std::string format_real(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_real(const Real& x) { return format_real(to_double(x)); }

double parse_real(const std::string& s) {
  if (s == "inf") return HUGE_VAL;
  if (s == "-inf") return -HUGE_VAL;
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("not a number: " + s);
  return v;
}

ParsedRecords parse_records(const std::string& text) {
  ParsedRecords out;
  std::istringstream is(text);
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_tabs(line);
    if (!have_header) {
      out.header = f;
      have_header = true;
      continue;
    }
    if (f.front() == "summary") {
      std::map<std::string, std::string> kv;
      for (std::size_t i = 1; i < f.size(); ++i) {
        const std::size_t eq = f[i].find('=');
        if (eq == std::string::npos) throw std::invalid_argument("summary field without '='");
        kv[f[i].substr(0, eq)] = f[i].substr(eq + 1);
      }
      out.summaries.push_back(std::move(kv));
      continue;
    }
    if (f.size() != out.header.size())
      throw std::invalid_argument("record width " + std::to_string(f.size()) + " != header width " +
                                  std::to_string(out.header.size()));
    std::map<std::string, std::string> row;
    for (std::size_t i = 0; i < f.size(); ++i) row[out.header[i]] = f[i];
    out.rows.push_back(std::move(row));
  }
  return out;
}

RecordTable esi_table(const EsiSet& set) {
  RecordTable t;
  t.header = {"index", "conjugator", "base"};
  push_geodesic_header(t.header, "line");
  for (const char* h : {"point_re", "point_im", "angle", "param", "status"}) t.header.push_back(h);
  // The last record closes the period and repeats the first on the quotient.
  for (std::size_t i = 0; i + 1 < set.records.size(); ++i) {
    const EsiRecord& r = set.records[i];
    std::vector<std::string> row{std::to_string(r.index), r.conjugator.empty() ? "1" : r.conjugator,
                                 to_string(r.base)};
    push_geodesic(row, r.line);
    row.push_back(format_real(r.point.z.real()));
    row.push_back(format_real(r.point.z.imag()));
    row.push_back(format_real(r.angle));
    row.push_back(format_real(r.param));
    row.push_back(r.right_angle ? "excluded" : "kept");
    t.rows.push_back(std::move(row));
  }
  t.summaries.push_back({{"label", set.label.str()},
                         {"essentialCount", std::to_string(set.essential_count)},
                         {"expected", std::to_string(EsiSet::expected_essential(set.label))},
                         {"quotientCount", std::to_string(set.quotient_count)},
                         {"translationLength", format_real(set.translation_length)},
                         {"mirrorResidual", format_real(set.mirror_residual)},
                         {"sharedCrossingResidual", format_real(set.shared_crossing_residual)}});
  return t;
}

std::string tag_string(const std::vector<LoopTag>& tags) {
  std::string s;
  for (LoopTag t : tags) s += t == LoopTag::around_gamma0 ? '0' : 'i';
  return s;
}

RecordTable connector_table(const ConnectorSet& set) {
  RecordTable t;
  t.header = {"index", "conjugator", "base"};
  push_geodesic_header(t.header, "line");
  push_geodesic_header(t.header, "orth");
  for (const char* h : {"foot_axis", "foot_partner", "separation", "perp_line", "perp_axis",
                        "half_turn", "partner"})
    t.header.push_back(h);
  for (const ConnectorRecord& r : set.records) {
    std::vector<std::string> row{std::to_string(r.index), r.conjugator.empty() ? "1" : r.conjugator,
                                 to_string(r.base)};
    push_geodesic(row, r.line);
    push_geodesic(row, r.orthogonal);
    for (const Real* v : {&r.foot_on_axis, &r.foot_on_partner_axis, &r.foot_separation,
                          &r.perp_line, &r.perp_axis, &r.half_turn_residual, &r.partner_residual})
      row.push_back(format_real(*v));
    t.rows.push_back(std::move(row));
  }
  t.summaries.push_back({{"label", set.label.str()},
                         {"markedPoints", std::to_string(set.marked_points())},
                         {"quotientConnectors", std::to_string(set.quotient_connectors())},
                         {"loopCount", std::to_string(set.loops.count())},
                         {"aroundGammaInf", std::to_string(set.loops.count_inf)},
                         {"aroundGamma0", std::to_string(set.loops.count_zero)},
                         {"loopTags", tag_string(set.loops.tags)},
                         {"pairingResidual", format_real(set.pairing_residual)}});
  return t;
}

}  // namespace hypesi
