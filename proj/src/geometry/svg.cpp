#include "cantor/svg.hpp"

#include "cantor/errors.hpp"

#include <algorithm>
#include <sstream>

namespace cantor {

namespace {

constexpr long long kViewport = 1000;

// sqrt(q) truncated to 1/1000; plotting only.
Rational approx_sqrt(const Rational& q) {
  BigInt scaled = q.num() * BigInt(1000000) / q.den();
  return Rational(boost::multiprecision::sqrt(scaled), BigInt(1000));
}

struct Box {
  std::optional<SceneBounds> b;
  void add(const Rational& x, const Rational& y) {
    if (!b) {
      b = SceneBounds{x, x, y, y};
      return;
    }
    b->xmin = std::min(b->xmin, x);
    b->xmax = std::max(b->xmax, x);
    b->ymin = std::min(b->ymin, y);
    b->ymax = std::max(b->ymax, y);
  }
};

void pad(Rational& lo, Rational& hi) {
  Rational extent = hi - lo;
  Rational margin = extent.is_zero() ? Rational(1) : extent / Rational(10);
  lo -= margin;
  hi += margin;
}

class Canvas {
 public:
  explicit Canvas(const SceneBounds& b) : b_(b) {
    if (!(b.xmin < b.xmax) || !(b.ymin < b.ymax)) throw DegenerateInput("scene bounds must have positive extent");
  }

  std::string x(const Rational& v) const { return to_fixed(Rational(kViewport) * (v - b_.xmin) / (b_.xmax - b_.xmin), 2); }
  std::string y(const Rational& v) const { return to_fixed(Rational(kViewport) * (b_.ymax - v) / (b_.ymax - b_.ymin), 2); }
  std::string rx(const Rational& r) const { return to_fixed(Rational(kViewport) * r / (b_.xmax - b_.xmin), 2); }
  std::string ry(const Rational& r) const { return to_fixed(Rational(kViewport) * r / (b_.ymax - b_.ymin), 2); }

 private:
  SceneBounds b_;
};

std::pair<Rational, Rational> plane(const Point& p) {
  if (p.dim() != 2) throw DegenerateInput("only plane scenes can be drawn");
  return {p.coords[0].render_approx(), p.coords[1].render_approx()};
}

bool is_arc_plan(const PathPlan& plan) {
  return std::any_of(plan.segments.begin(), plan.segments.end(),
                     [](const Segment& s) { return std::holds_alternative<CircleArc>(s); });
}

}  // namespace

SceneBounds auto_bounds(const std::vector<PathPlan>& plans) {
  Box box;
  for (const auto& plan : plans) {
    for (const auto& w : plan.waypoints) {
      auto [x, y] = plane(w);
      box.add(x, y);
    }
    for (const auto& seg : plan.segments) {
      if (const auto* arc = std::get_if<CircleArc>(&seg)) {
        Rational r = approx_sqrt(arc->radius_squared) + Rational(1, 1000);
        box.add(arc->center[0] - r, arc->center[1] - r);
        box.add(arc->center[0] + r, arc->center[1] + r);
        for (const auto& e : arc->excluded) box.add(e[0], e[1]);
      }
    }
  }
  if (!box.b) return SceneBounds{};
  SceneBounds b = *box.b;
  pad(b.xmin, b.xmax);
  pad(b.ymin, b.ymax);
  return b;
}

std::string emit_svg(const std::vector<PathPlan>& plans, const std::optional<SceneBounds>& bounds) {
  const Canvas c(bounds.value_or(auto_bounds(plans)));
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kViewport << "\" height=\"" << kViewport
      << "\" viewBox=\"0 0 " << kViewport << ' ' << kViewport << "\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << kViewport << "\" height=\"" << kViewport
      << "\" fill=\"white\" stroke=\"black\"/>\n";

  std::vector<RationalPoint2> excluded;
  for (std::size_t i = 0; i < plans.size(); ++i) {
    const PathPlan& plan = plans[i];
    if (plan.waypoints.empty()) continue;
    out << "  <g id=\"plan-" << i << "\" data-method=\"" << plan.method << "\" data-segments=\""
        << plan.segments.size() << "\">\n";
    if (is_arc_plan(plan)) {
      auto [x0, y0] = plane(plan.waypoints.front());
      out << "    <path fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" d=\"M " << c.x(x0) << ' ' << c.y(y0);
      for (const auto& seg : plan.segments) {
        const auto& arc = std::get<CircleArc>(seg);
        Rational r = approx_sqrt(arc.radius_squared);
        // The y flip turns scene counterclockwise into the SVG positive sweep.
        out << " A " << c.rx(r) << ' ' << c.ry(r) << " 0 0 " << (arc.counterclockwise ? 1 : 0) << ' '
            << c.x(arc.to[0]) << ' ' << c.y(arc.to[1]);
        for (const auto& e : arc.excluded) {
          if (std::find(excluded.begin(), excluded.end(), e) == excluded.end()) excluded.push_back(e);
        }
      }
      out << "\"/>\n";
    } else {
      out << "    <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
      for (std::size_t k = 0; k < plan.waypoints.size(); ++k) {
        auto [x, y] = plane(plan.waypoints[k]);
        out << (k ? " " : "") << c.x(x) << ',' << c.y(y);
      }
      out << "\"/>\n";
    }
    auto [ax, ay] = plane(plan.waypoints.front());
    auto [bx, by] = plane(plan.waypoints.back());
    out << "    <circle cx=\"" << c.x(ax) << "\" cy=\"" << c.y(ay) << "\" r=\"4\" fill=\"black\"/>\n"
        << "    <text x=\"" << c.x(ax) << "\" y=\"" << c.y(ay) << "\" dx=\"6\" dy=\"-6\" font-size=\"16\">N</text>\n"
        << "    <circle cx=\"" << c.x(bx) << "\" cy=\"" << c.y(by) << "\" r=\"4\" fill=\"black\"/>\n"
        << "    <text x=\"" << c.x(bx) << "\" y=\"" << c.y(by) << "\" dx=\"6\" dy=\"-6\" font-size=\"16\">N′</text>\n"
        << "  </g>\n";
  }
  for (const auto& e : excluded) {
    out << "  <circle class=\"excluded\" cx=\"" << c.x(e[0]) << "\" cy=\"" << c.y(e[1])
        << "\" r=\"3\" fill=\"crimson\"/>\n";
  }

  out << "  <g id=\"legend\" font-size=\"14\">\n";
  if (plans.empty()) {
    out << "    <text x=\"10\" y=\"20\">no paths</text>\n";
  } else {
    std::vector<PunctureSpec> specs;
    for (const auto& p : plans) {
      if (std::find(specs.begin(), specs.end(), p.spec) == specs.end()) specs.push_back(p.spec);
    }
    int row = 0;
    for (PunctureSpec s : specs) {
      out << "    <text x=\"10\" y=\"" << 20 + 18 * row++ << "\">removed: " << to_string(s) << "</text>\n";
    }
    if (!excluded.empty()) {
      out << "    <text x=\"10\" y=\"" << 20 + 18 * row << "\" fill=\"crimson\">excluded points: " << excluded.size()
          << "</text>\n";
    }
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace cantor
