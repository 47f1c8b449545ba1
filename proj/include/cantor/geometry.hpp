#pragma once

#include "cantor/rational.hpp"
#include "cantor/tagged_real.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cantor {

/// A point of R^n (n >= 2) given by class-tagged coordinates.
struct Point {
  std::vector<TaggedReal> coords;

  std::size_t dim() const noexcept { return coords.size(); }
  /// Coordinate-wise TaggedReal::same_value.
  bool same_value(const Point& other) const;
  std::string str() const;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Which points are removed from the plane.  A point is removed only when
/// every one of its coordinates belongs to the forbidden classes.
enum class PunctureSpec {
  purely_algebraic,      // all coordinates natural/rational/algebraic-irrational
  purely_transcendental,  // all coordinates transcendental
  purely_non_natural,    // no coordinate is a natural number
};

std::string_view to_string(PunctureSpec spec);
PunctureSpec parse_puncture_spec(std::string_view text);

bool is_forbidden(NumberClass c, PunctureSpec spec);
bool is_punctured(const Point& p, PunctureSpec spec);

/// Segment that moves one coordinate while the others stay put; `fixed`
/// names the held coordinate whose class keeps the segment clear.
struct AxisSegment {
  std::size_t moving = 0;
  std::size_t fixed = 0;
  TaggedReal fixed_value;
};

using RationalPoint2 = std::array<Rational, 2>;

/// Arc of the circle with the given center through two rational points,
/// traversed from `from` to `to`.
struct CircleArc {
  RationalPoint2 center;
  Rational radius_squared;
  RationalPoint2 from;
  RationalPoint2 to;
  bool counterclockwise = true;
  Rational parameter;                         // t on the perpendicular bisector
  std::vector<Rational> forbidden_parameters;  // one per excluded point whose t is pinned
  std::vector<RationalPoint2> excluded;        // the finite excluded set
};

using Segment = std::variant<AxisSegment, CircleArc>;

struct PathPlan {
  PunctureSpec spec = PunctureSpec::purely_algebraic;
  std::vector<Point> waypoints;   // waypoints.front() and .back() are the query endpoints
  std::vector<Segment> segments;  // segments[i] joins waypoints[i] and waypoints[i + 1]
  std::uint64_t pieces = 1;       // subdivisions used by the bounded-deviation planner
  std::string method;
};

/// Axis-parallel path avoiding purely algebraic points: every segment holds a
/// transcendental coordinate fixed.  Two phases when the destination has a
/// transcendental coordinate other than the one held, otherwise three with a
/// transcendental stop short of the destination.  Throws
/// NoTranscendentalCoordinate when either endpoint has none.
PathPlan plan_path_transcendental_fixed(const Point& from, const Point& to);

/// Same construction with algebraic coordinates held, avoiding purely
/// transcendental points.  Throws NoAlgebraicCoordinate.
PathPlan plan_path_algebraic_fixed(const Point& from, const Point& to);

/// (n, xi) -> (n, m) -> (n', m) -> (n', xi'): moves along grid lines with a
/// natural coordinate held.  The first coordinate of both endpoints must be
/// tagged natural (NotOnGrid otherwise).
PathPlan plan_path_natural_grid(const Point& from, const Point& to, const BigInt& m);

/// Planner matching `spec`; the natural grid uses `m` = 0.
PathPlan plan_path(const Point& from, const Point& to, PunctureSpec spec);

/// Circle through n and n1 whose centre is the first non-negative integer t
/// on the bisector c(t) = midpoint + t * perp((n1 - n) / 2) such that no
/// point of `excluded` lies on the circle.  The arc is the minor one, taken
/// counterclockwise.  Throws DegenerateInput when n == n1 or an excluded
/// point coincides with an endpoint.
CircleArc circle_avoiding(const RationalPoint2& n, const RationalPoint2& n1,
                          const std::vector<RationalPoint2>& excluded);

/// Chain of arcs through consecutive points, meeting at shared waypoints.
PathPlan plan_arc_chain(const std::vector<RationalPoint2>& points, const std::vector<RationalPoint2>& excluded);

/// Staircase that stays within `eps` of the straight line from -> to,
/// measured on rendered coordinates.  Returns the basic plan when it already
/// fits.  The natural grid cannot be refined below the grid spacing and
/// throws DeviationUnattainable when its basic plan does not fit.
PathPlan plan_path_bounded_deviation(const Point& from, const Point& to, const Rational& eps, PunctureSpec spec);

/// Largest squared perpendicular distance of a waypoint (rendered) from the
/// line through the rendered endpoints.
Rational max_deviation_squared(const PathPlan& plan, const Point& from, const Point& to);

struct PathViolation {
  std::size_t segment = 0;
  std::string reason;
  std::optional<Point> witness;  // a removed point on the segment, when one can be exhibited
};

struct PathVerdict {
  bool valid = false;
  std::optional<PathViolation> violation;
  std::vector<std::string> segment_notes;  // why each segment is clear
};

PathVerdict validate_path(const PathPlan& plan, PunctureSpec spec);

RationalPoint2 to_rational_point(const Point& p);
Point from_rational_point(const RationalPoint2& p);

}  // namespace cantor
