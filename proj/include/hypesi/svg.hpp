#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypesi/esi.hpp"

namespace hypesi {

/// Upper half-plane picture. Every geodesic must have real endpoints.
struct Scene {
  std::vector<Geodesic> axes;
  std::vector<Geodesic> lines;
  std::vector<PlanePoint> dots;
  std::vector<PlanePoint> crosses;
  /// Six sides in cyclic order; adjacent sides must cross.
  std::optional<std::array<Geodesic, 6>> hexagon;
};

/// One period of the ESI picture: the axis, its labelled lines, kept
/// crossings as dots and right-angle crossings as crosses.
Scene esi_scene(const GroupFrame& frame, const EsiSet& set);

/// Deterministic SVG document. Throws GeometryError("plot is planar-only")
/// for a non-real geodesic.
std::string render_svg(const Scene& scene);

}  // namespace hypesi
