#include "hypesi/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hypesi {

using boost::multiprecision::cos;
using boost::multiprecision::sin;

MobiusMap rotation_about(const Geodesic& g, const Real& angle) {
  const MobiusMap t = canonical_map(g);
  const Complex half(cos(angle / 2), sin(angle / 2));
  return inverse(t) * MobiusMap::diagonal(half) * t;
}

std::pair<MobiusMap, MobiusMap> deform(const MobiusMap& a, const MobiusMap& b,
                                       const Deformation& d) {
  if (d.family.empty() || d.angle == 0) return {a, b};
  if (d.family != "twist-about-L") throw ConfigError("unknown deformation family: " + d.family);
  const Geodesic l = common_perpendicular(axis_of(a), axis_of(b));
  return {a, conjugate(b, rotation_about(l, d.angle))};
}

std::pair<MobiusMap, MobiusMap> GroupSpec::generators() const { return deform(a, b, deformation); }

GroupSpec GroupSpec::with_angle(const Real& angle) const {
  GroupSpec g = *this;
  if (g.deformation.family.empty()) g.deformation.family = "twist-about-L";
  g.deformation.angle = angle;
  return g;
}

namespace {

using nlohmann::json;

Real read_real(const json& v, const std::string& where) {
  if (v.is_number()) return Real(v.get<double>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      std::size_t used = 0;
      (void)std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return Real(s);
    } catch (const std::exception&) {
      throw ConfigError(where + ": not a decimal number: " + s);
    }
  }
  throw ConfigError(where + ": expected a number");
}

MobiusMap read_matrix(const json& root, const char* key) {
  if (!root.contains(key)) throw ConfigError(std::string("missing matrix ") + key);
  const json& m = root.at(key);
  if (!m.is_array() || m.size() != 4)
    throw ConfigError(std::string(key) + ": expected four complex entries");
  Complex e[4];
  for (int i = 0; i < 4; ++i) {
    const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
    const json& z = m.at(i);
    if (z.is_array() && z.size() == 2)
      e[i] = Complex(read_real(z.at(0), where), read_real(z.at(1), where));
    else
      e[i] = Complex(read_real(z, where), 0);
  }
  try {
    return MobiusMap::from_entries(e[0], e[1], e[2], e[3]);
  } catch (const GeometryError& err) {
    throw ConfigError(std::string(key) + ": " + err.what());
  }
}

}  // namespace

GroupSpec parse_group_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed group config: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("group config must be a JSON object");
  GroupSpec g;
  g.name = root.value("name", std::string("unnamed"));
  g.a = read_matrix(root, "A");
  g.b = read_matrix(root, "B");
  if (root.contains("deformation")) {
    const json& d = root.at("deformation");
    if (!d.is_object() || !d.contains("family") || !d.contains("angle"))
      throw ConfigError("deformation needs family and angle");
    g.deformation.family = d.at("family").get<std::string>();
    g.deformation.angle = read_real(d.at("angle"), "deformation.angle");
    if (g.deformation.family != "twist-about-L")
      throw ConfigError("unknown deformation family: " + g.deformation.family);
  }
  return g;
}

GroupSpec load_group_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read group config: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_config(ss.str());
}

}  // namespace hypesi
