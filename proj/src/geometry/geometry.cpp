#include "cantor/geometry.hpp"

#include "cantor/errors.hpp"

#include <algorithm>
#include <functional>

namespace cantor {

bool Point::same_value(const Point& other) const {
  if (dim() != other.dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!coords[i].same_value(other.coords[i])) return false;
  }
  return true;
}

std::string Point::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) out += ", ";
    out += coords[i].str();
  }
  return out + ")";
}

std::string_view to_string(PunctureSpec spec) {
  switch (spec) {
    case PunctureSpec::purely_algebraic: return "purely_algebraic";
    case PunctureSpec::purely_transcendental: return "purely_transcendental";
    case PunctureSpec::purely_non_natural: return "purely_non_natural";
  }
  return "?";
}

PunctureSpec parse_puncture_spec(std::string_view text) {
  if (text == "AA" || text == "purely_algebraic") return PunctureSpec::purely_algebraic;
  if (text == "TT" || text == "purely_transcendental") return PunctureSpec::purely_transcendental;
  if (text == "non_natural" || text == "purely_non_natural") return PunctureSpec::purely_non_natural;
  throw ParseError("unknown puncture spec '" + std::string(text) + "'");
}

bool is_forbidden(NumberClass c, PunctureSpec spec) {
  switch (spec) {
    case PunctureSpec::purely_algebraic: return is_algebraic(c);
    case PunctureSpec::purely_transcendental: return c == NumberClass::transcendental;
    case PunctureSpec::purely_non_natural: return c != NumberClass::natural;
  }
  return true;
}

bool is_punctured(const Point& p, PunctureSpec spec) {
  return std::all_of(p.coords.begin(), p.coords.end(),
                     [spec](const TaggedReal& x) { return is_forbidden(x.number_class(), spec); });
}

RationalPoint2 to_rational_point(const Point& p) {
  if (p.dim() != 2) throw DegenerateInput("expected a point of the plane");
  auto x = p.coords[0].exact_value();
  auto y = p.coords[1].exact_value();
  if (!x || !y) throw DegenerateInput("point " + p.str() + " does not have rational coordinates");
  return {*x, *y};
}

Point from_rational_point(const RationalPoint2& p) {
  return Point{{TaggedReal::rational(p[0]), TaggedReal::rational(p[1])}};
}

namespace {

// Accumulates waypoints, emitting one axis segment per nonzero move.
class PlanBuilder {
 public:
  PlanBuilder(const Point& start, PunctureSpec spec, std::string method) : current_(start) {
    plan_.spec = spec;
    plan_.method = std::move(method);
    plan_.waypoints.push_back(start);
  }

  void move(std::size_t coord, const TaggedReal& value, std::size_t held) {
    if (current_.coords[coord].same_value(value)) {
      current_.coords[coord] = value;
      return;
    }
    plan_.segments.push_back(AxisSegment{coord, held, current_.coords[held]});
    current_.coords[coord] = value;
    plan_.waypoints.push_back(current_);
  }

  PathPlan finish(const Point& destination) && {
    // Equal values may still differ in tag; the last waypoint is the query endpoint.
    if (plan_.waypoints.size() > 1) plan_.waypoints.back() = destination;
    return std::move(plan_);
  }

 private:
  Point current_;
  PathPlan plan_;
};

void check_dims(const Point& from, const Point& to) {
  if (from.dim() < 2 || from.dim() != to.dim()) throw DegenerateInput("endpoints need the same dimension n >= 2");
}

using IntermediateFn = std::function<TaggedReal(const TaggedReal& from, const TaggedReal& to)>;

Rational stop_radius(const TaggedReal& from, const TaggedReal& to) {
  Rational gap = (from.render_approx() - to.render_approx()).abs();
  Rational half(1, 2);
  if (gap.is_zero()) return half;
  return std::min(gap / Rational(2), half);
}

Rational stop_target(const TaggedReal& to) { return to.exact_value().value_or(to.render_approx()); }

// Transcendental value just short of `to`, on the side `from` comes from.
TaggedReal transcendental_stop(const TaggedReal& from, const TaggedReal& to) {
  const Rational target = stop_target(to);
  TaggedReal t = shifted_transcendental(target, stop_radius(from, to));
  if (from.render_approx() < to.render_approx()) t = t.affine(Rational(-1), target * Rational(2));
  return t;
}

TaggedReal rational_stop(const TaggedReal& from, const TaggedReal& to) {
  const Rational target = stop_target(to);
  Rational step = stop_radius(from, to) / Rational(2);
  return TaggedReal::rational(from.render_approx() < to.render_approx() ? target - step : target + step);
}

template <typename Missing>
PathPlan plan_fixed_class(const Point& from, const Point& to, PunctureSpec spec, const IntermediateFn& intermediate,
                          const char* what) {
  check_dims(from, to);
  const std::size_t n = from.dim();
  auto exempt = [spec](const TaggedReal& x) { return !is_forbidden(x.number_class(), spec); };
  std::vector<std::size_t> held_candidates;  // exempt coordinates of `from`
  std::vector<std::size_t> final_candidates;  // exempt coordinates of `to`
  for (std::size_t i = 0; i < n; ++i) {
    if (exempt(from.coords[i])) held_candidates.push_back(i);
    if (exempt(to.coords[i])) final_candidates.push_back(i);
  }
  if (held_candidates.empty()) throw Missing("start point " + from.str() + " has no " + what + " coordinate");
  if (final_candidates.empty()) throw Missing("end point " + to.str() + " has no " + what + " coordinate");

  const std::string method = std::string(what) + "-fixed";
  PlanBuilder b(from, spec, method);
  if (from.same_value(to)) return std::move(b).finish(to);

  // A held coordinate that never has to move.
  for (std::size_t v : held_candidates) {
    if (from.coords[v].same_value(to.coords[v]) && exempt(to.coords[v])) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c != v) b.move(c, to.coords[c], v);
      }
      return std::move(b).finish(to);
    }
  }

  // Hold v while the rest reach their targets, then move v while holding an
  // exempt target coordinate mu.
  for (std::size_t v : held_candidates) {
    for (std::size_t mu : final_candidates) {
      if (mu == v) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != v) b.move(c, to.coords[c], v);
      }
      b.move(v, to.coords[v], mu);
      return std::move(b).finish(to);
    }
  }

  // Only coordinate v is exempt at both ends: stop coordinate rho at an
  // exempt value short of its target, move v across, then finish rho.
  const std::size_t v = held_candidates.front();
  std::size_t rho = v == 0 ? 1 : 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (c != v && !from.coords[c].same_value(to.coords[c])) {
      rho = c;
      break;
    }
  }
  const TaggedReal stop = intermediate(from.coords[rho], to.coords[rho]);
  for (std::size_t c = 0; c < n; ++c) {
    if (c != v) b.move(c, c == rho ? stop : to.coords[c], v);
  }
  b.move(v, to.coords[v], rho);
  b.move(rho, to.coords[rho], v);
  return std::move(b).finish(to);
}

}  // namespace

PathPlan plan_path_transcendental_fixed(const Point& from, const Point& to) {
  return plan_fixed_class<NoTranscendentalCoordinate>(from, to, PunctureSpec::purely_algebraic, transcendental_stop,
                                                      "transcendental");
}

PathPlan plan_path_algebraic_fixed(const Point& from, const Point& to) {
  return plan_fixed_class<NoAlgebraicCoordinate>(from, to, PunctureSpec::purely_transcendental, rational_stop,
                                                 "algebraic");
}

PathPlan plan_path_natural_grid(const Point& from, const Point& to, const BigInt& m) {
  check_dims(from, to);
  if (from.coords[0].number_class() != NumberClass::natural || to.coords[0].number_class() != NumberClass::natural) {
    throw NotOnGrid("both endpoints need a natural first coordinate");
  }
  if (m.sign() < 0) throw NotOnGrid("grid line m must be a natural number");
  const TaggedReal grid_line = TaggedReal::natural(m);
  PlanBuilder b(from, PunctureSpec::purely_non_natural, "natural-grid");
  for (std::size_t c = 1; c < from.dim(); ++c) b.move(c, grid_line, 0);
  b.move(0, to.coords[0], 1);
  for (std::size_t c = 1; c < from.dim(); ++c) b.move(c, to.coords[c], 0);
  return std::move(b).finish(to);
}

PathPlan plan_path(const Point& from, const Point& to, PunctureSpec spec) {
  switch (spec) {
    case PunctureSpec::purely_algebraic: return plan_path_transcendental_fixed(from, to);
    case PunctureSpec::purely_transcendental: return plan_path_algebraic_fixed(from, to);
    case PunctureSpec::purely_non_natural: return plan_path_natural_grid(from, to, BigInt(0));
  }
  throw Error("unknown puncture spec");
}

// ---------------------------------------------------------------------------
// Circle arcs

namespace {

Rational dot(const RationalPoint2& a, const RationalPoint2& b) { return a[0] * b[0] + a[1] * b[1]; }
RationalPoint2 sub(const RationalPoint2& a, const RationalPoint2& b) { return {a[0] - b[0], a[1] - b[1]}; }
Rational dist2(const RationalPoint2& a, const RationalPoint2& b) {
  auto d = sub(a, b);
  return dot(d, d);
}

}  // namespace

CircleArc circle_avoiding(const RationalPoint2& n, const RationalPoint2& n1,
                          const std::vector<RationalPoint2>& excluded) {
  if (n == n1) throw DegenerateInput("arc endpoints coincide");
  const Rational half(1, 2);
  const RationalPoint2 mid{(n[0] + n1[0]) * half, (n[1] + n1[1]) * half};
  // perpendicular of the half chord, rotated +90 degrees
  const RationalPoint2 dir{-(n1[1] - n[1]) * half, (n1[0] - n[0]) * half};

  CircleArc arc;
  arc.from = n;
  arc.to = n1;
  arc.excluded = excluded;
  // |c(t) - e|^2 = |c(t) - n|^2 is affine in t: a t + b = 0
  for (const auto& e : excluded) {
    if (e == n || e == n1) throw DegenerateInput("excluded point coincides with an arc endpoint");
    const RationalPoint2 en = sub(e, n);
    const Rational a = Rational(-2) * dot(dir, en);
    const Rational b = dot(e, e) - dot(n, n) - Rational(2) * dot(mid, en);
    if (a.is_zero()) {
      if (b.is_zero()) throw DegenerateInput("excluded point lies on every circle through the endpoints");
      continue;
    }
    arc.forbidden_parameters.push_back(-b / a);
  }
  Rational t(0);
  while (std::find(arc.forbidden_parameters.begin(), arc.forbidden_parameters.end(), t) !=
         arc.forbidden_parameters.end()) {
    t += Rational(1);
  }
  arc.parameter = t;
  arc.center = {mid[0] + t * dir[0], mid[1] + t * dir[1]};
  arc.radius_squared = dist2(arc.center, n);
  // t >= 0 keeps the centre on the left of n -> n1 (or on the chord), so the
  // minor arc runs counterclockwise.
  arc.counterclockwise = true;
  return arc;
}

PathPlan plan_arc_chain(const std::vector<RationalPoint2>& points, const std::vector<RationalPoint2>& excluded) {
  if (points.size() < 2) throw DegenerateInput("an arc chain needs at least two points");
  PathPlan plan;
  plan.spec = PunctureSpec::purely_algebraic;
  plan.method = "circle-arc";
  plan.waypoints.push_back(from_rational_point(points.front()));
  for (std::size_t i = 1; i < points.size(); ++i) {
    plan.segments.push_back(circle_avoiding(points[i - 1], points[i], excluded));
    plan.waypoints.push_back(from_rational_point(points[i]));
  }
  return plan;
}

// ---------------------------------------------------------------------------
// Bounded deviation

namespace {

std::vector<Rational> rendered(const Point& p) {
  std::vector<Rational> out;
  out.reserve(p.dim());
  for (const auto& c : p.coords) out.push_back(c.render_approx());
  return out;
}

Rational deviation_squared(const std::vector<Rational>& p, const std::vector<Rational>& a,
                           const std::vector<Rational>& dir, const Rational& dir2) {
  Rational pp(0);
  Rational pd(0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational rel = p[i] - a[i];
    pp += rel * rel;
    pd += rel * dir[i];
  }
  if (dir2.is_zero()) return pp;
  return pp - pd * pd / dir2;
}

}  // namespace

Rational max_deviation_squared(const PathPlan& plan, const Point& from, const Point& to) {
  const auto a = rendered(from);
  const auto b = rendered(to);
  std::vector<Rational> dir(a.size());
  Rational dir2(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    dir[i] = b[i] - a[i];
    dir2 += dir[i] * dir[i];
  }
  Rational worst(0);
  for (const auto& w : plan.waypoints) worst = std::max(worst, deviation_squared(rendered(w), a, dir, dir2));
  return worst;
}

PathPlan plan_path_bounded_deviation(const Point& from, const Point& to, const Rational& eps, PunctureSpec spec) {
  if (eps.sign() <= 0) throw OutOfRange("deviation bound must be positive");
  check_dims(from, to);
  const Rational eps2 = eps * eps;

  if (spec == PunctureSpec::purely_non_natural) {
    // Grid line through the rounded mean of the moving coordinate.
    Rational mean = (from.coords[1].render_approx() + to.coords[1].render_approx()) / Rational(2);
    BigInt m = (mean + Rational(1, 2)).floor();
    if (m.sign() < 0) m = 0;
    PathPlan basic = plan_path_natural_grid(from, to, m);
    if (max_deviation_squared(basic, from, to) > eps2) {
      throw DeviationUnattainable("grid-line paths cannot stay within " + eps.str() + " of this line");
    }
    return basic;
  }

  PathPlan basic = plan_path(from, to, spec);
  if (max_deviation_squared(basic, from, to) <= eps2) return basic;

  const std::size_t n = from.dim();
  const auto a = rendered(from);
  const auto b = rendered(to);
  Rational span(0);
  for (std::size_t i = 0; i < n; ++i) span = std::max(span, (b[i] - a[i]).abs());

  // Waypoints of piece i stay in the box spanned by Q_i and Q_{i+1}, so the
  // deviation is at most sqrt(n) * (span / k + 3 * shift).  With shift <
  // eps / 16n this is <= eps once k >= 16 n span / 13 eps.
  const Rational shift = eps / Rational(16 * static_cast<long long>(n));
  const Rational needed = Rational(16 * static_cast<long long>(n)) * span / (Rational(13) * eps);
  std::uint64_t k = 1;
  while (Rational(BigInt(k)) < needed) k *= 2;

  for (; k <= (std::uint64_t{1} << 24); k *= 2) {
    std::vector<Point> stations;
    stations.reserve(k + 1);
    stations.push_back(from);
    for (std::uint64_t i = 1; i < k; ++i) {
      const Rational frac{BigInt(i), BigInt(k)};
      Point q;
      for (std::size_t c = 0; c < n; ++c) {
        Rational target = a[c] + frac * (b[c] - a[c]);
        q.coords.push_back(spec == PunctureSpec::purely_algebraic ? shifted_transcendental(target, shift)
                                                                  : TaggedReal::rational(target));
      }
      stations.push_back(std::move(q));
    }
    stations.push_back(to);

    PathPlan plan;
    plan.spec = spec;
    plan.method = basic.method + "-staircase";
    plan.pieces = k;
    plan.waypoints.push_back(from);
    for (std::size_t i = 0; i + 1 < stations.size(); ++i) {
      PathPlan piece = plan_path(stations[i], stations[i + 1], spec);
      plan.segments.insert(plan.segments.end(), piece.segments.begin(), piece.segments.end());
      plan.waypoints.insert(plan.waypoints.end(), piece.waypoints.begin() + 1, piece.waypoints.end());
    }
    if (max_deviation_squared(plan, from, to) <= eps2) return plan;
  }
  throw DeviationUnattainable("no staircase within " + eps.str() + " found");
}

// ---------------------------------------------------------------------------
// Validation

namespace {

// A value of a forbidden class strictly between two coordinates, when the
// declared bounds separate them.
std::optional<TaggedReal> forbidden_value_between(const TaggedReal& x, const TaggedReal& y, PunctureSpec spec) {
  const TaggedReal& lo = x.upper_bound() < y.upper_bound() ? x : y;
  const TaggedReal& hi = &lo == &x ? y : x;
  // Bounds are strict, so any q with a <= q <= b lies strictly between.
  const Rational a = lo.upper_bound();
  const Rational b = hi.lower_bound();
  if (b < a) return std::nullopt;
  const Rational mid = (a + b) / Rational(2);
  switch (spec) {
    case PunctureSpec::purely_algebraic: return TaggedReal::rational(mid);
    case PunctureSpec::purely_transcendental:
      if (a == b) return std::nullopt;
      return shifted_transcendental(mid, (b - a) / Rational(2));
    case PunctureSpec::purely_non_natural: {
      Rational q = mid;
      if (q.is_integer()) q = (mid + b) / Rational(2);
      if (q.is_integer()) return std::nullopt;
      return TaggedReal::rational(q);
    }
  }
  return std::nullopt;
}

std::optional<PathViolation> check_axis(const AxisSegment& seg, const Point& a, const Point& b, PunctureSpec spec,
                                        std::size_t index, std::string& note) {
  auto fail = [&](std::string reason) { return PathViolation{index, std::move(reason), std::nullopt}; };
  if (a.dim() != b.dim() || seg.moving >= a.dim() || seg.fixed >= a.dim() || seg.moving == seg.fixed) {
    return fail("malformed axis segment");
  }
  for (std::size_t c = 0; c < a.dim(); ++c) {
    const bool same = a.coords[c].same_value(b.coords[c]);
    if (c == seg.moving && same) return fail("segment does not move coordinate " + std::to_string(c + 1));
    if (c != seg.moving && !same) return fail("segment moves more than one coordinate");
  }
  if (!a.coords[seg.fixed].same_value(seg.fixed_value)) return fail("held coordinate does not match the descriptor");

  std::optional<std::size_t> clear_by;
  if (!is_forbidden(seg.fixed_value.number_class(), spec)) {
    clear_by = seg.fixed;
  } else {
    for (std::size_t c = 0; c < a.dim(); ++c) {
      if (c != seg.moving && !is_forbidden(a.coords[c].number_class(), spec)) {
        clear_by = c;
        break;
      }
    }
  }
  if (clear_by) {
    note = "x" + std::to_string(*clear_by + 1) + " = " + a.coords[*clear_by].str() + " is " +
           std::string(to_string(a.coords[*clear_by].number_class())) + " on the whole segment";
    return std::nullopt;
  }
  PathViolation v{index, "every held coordinate is of a removed class", std::nullopt};
  if (auto between = forbidden_value_between(a.coords[seg.moving], b.coords[seg.moving], spec)) {
    Point witness = a;
    witness.coords[seg.moving] = *between;
    v.witness = std::move(witness);
  }
  return v;
}

std::optional<PathViolation> check_arc(const CircleArc& arc, const Point& a, const Point& b, std::size_t index,
                                       std::string& note) {
  auto fail = [&](std::string reason) { return PathViolation{index, std::move(reason), std::nullopt}; };
  RationalPoint2 pa;
  RationalPoint2 pb;
  try {
    pa = to_rational_point(a);
    pb = to_rational_point(b);
  } catch (const DegenerateInput&) {
    return fail("arc endpoints must have rational coordinates");
  }
  if (pa != arc.from || pb != arc.to) return fail("arc endpoints do not match the waypoints");
  if (dist2(arc.center, pa) != arc.radius_squared || dist2(arc.center, pb) != arc.radius_squared) {
    return fail("arc endpoint is not on the circle");
  }
  for (const auto& e : arc.excluded) {
    if (e == pa || e == pb) return fail("arc endpoint is an excluded point");
    if (dist2(arc.center, e) == arc.radius_squared) {
      PathViolation v = fail("excluded point lies on the circle");
      v.witness = from_rational_point(e);
      return v;
    }
  }
  note = "circle centre (" + arc.center[0].str() + ", " + arc.center[1].str() + ") misses all " +
         std::to_string(arc.excluded.size()) + " excluded points";
  return std::nullopt;
}

}  // namespace

PathVerdict validate_path(const PathPlan& plan, PunctureSpec spec) {
  PathVerdict verdict;
  auto fail = [&](PathViolation v) {
    verdict.valid = false;
    verdict.violation = std::move(v);
    return verdict;
  };
  if (plan.waypoints.empty()) return fail({0, "plan has no waypoints", std::nullopt});
  if (plan.segments.size() + 1 != plan.waypoints.size()) {
    return fail({0, "segment count does not match waypoint count", std::nullopt});
  }
  const bool has_arcs = std::any_of(plan.segments.begin(), plan.segments.end(),
                                    [](const Segment& s) { return std::holds_alternative<CircleArc>(s); });
  if (!has_arcs) {
    // Arc plans use rational stand-ins whose removal is modelled by the excluded set instead.
    for (std::size_t i = 0; i < plan.waypoints.size(); ++i) {
      if (is_punctured(plan.waypoints[i], spec)) {
        return fail({i == 0 ? 0 : i - 1, "waypoint " + plan.waypoints[i].str() + " is a removed point",
                     plan.waypoints[i]});
      }
    }
  }
  for (std::size_t i = 0; i < plan.segments.size(); ++i) {
    std::string note;
    const Point& a = plan.waypoints[i];
    const Point& b = plan.waypoints[i + 1];
    std::optional<PathViolation> v =
        std::visit([&](const auto& seg) -> std::optional<PathViolation> {
          using T = std::decay_t<decltype(seg)>;
          if constexpr (std::is_same_v<T, AxisSegment>) {
            return check_axis(seg, a, b, spec, i, note);
          } else {
            return check_arc(seg, a, b, i, note);
          }
        }, plan.segments[i]);
    if (v) return fail(std::move(*v));
    verdict.segment_notes.push_back(std::move(note));
  }
  verdict.valid = true;
  return verdict;
}

}  // namespace cantor
