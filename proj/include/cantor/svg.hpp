#pragma once

#include "cantor/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cantor {

struct SceneBounds {
  Rational xmin{0};
  Rational xmax{1};
  Rational ymin{0};
  Rational ymax{1};
};

/// Bounding box of every rendered waypoint, arc circle and excluded point,
/// padded by 10% of its extent on each side (or 1 when the extent is zero).
SceneBounds auto_bounds(const std::vector<PathPlan>& plans);

/// Deterministic 1000x1000 SVG of the plans in the plane.
///
/// Scene point (x, y) maps to X = 1000 (x - xmin) / (xmax - xmin) and
/// Y = 1000 (ymax - y) / (ymax - ymin), printed with two decimals from the
/// rendered approximation of each coordinate.  Axis plans become polylines,
/// arc plans a path of circular arcs.  Without bounds, auto_bounds is used;
/// an empty plan list gives the scaffold on [0, 1]^2.
std::string emit_svg(const std::vector<PathPlan>& plans, const std::optional<SceneBounds>& bounds = std::nullopt);

}  // namespace cantor
