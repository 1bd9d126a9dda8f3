#pragma once

#include <string>

#include "hypesi/frame.hpp"

namespace hypesi {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rotation by `angle` about g (z -> e^{i angle} z in the frame of g).
MobiusMap rotation_about(const Geodesic& g, const Real& angle);

/// One-parameter deformation of a planar pair. The only family,
/// "twist-about-L", conjugates B by the rotation about the common
/// perpendicular L of the two axes; angle 0 is the undeformed group.
struct Deformation {
  std::string family;
  Real angle = 0;
};

struct GroupSpec {
  std::string name;
  MobiusMap a;
  MobiusMap b;
  Deformation deformation;

  /// Generators after applying the deformation.
  std::pair<MobiusMap, MobiusMap> generators() const;
  GroupSpec with_angle(const Real& angle) const;
};

std::pair<MobiusMap, MobiusMap> deform(const MobiusMap& a, const MobiusMap& b,
                                       const Deformation& d);

/// JSON schema:
///   {"name": str,
///    "A": [[re, im], [re, im], [re, im], [re, im]],   entries a, b, c, d
///    "B": [...],
///    "deformation": {"family": str, "angle": number}}  (optional)
/// Reals may be JSON numbers or decimal strings (read at full precision).
GroupSpec parse_group_config(const std::string& text);
GroupSpec load_group_config(const std::string& path);

}  // namespace hypesi
