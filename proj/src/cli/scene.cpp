#include "cantor/cli.hpp"

#include "cantor/errors.hpp"
#include "json_io.hpp"

#include <fstream>
#include <sstream>

namespace cantor::cli {

Rational rational_from_json(const Json& value, const char* field) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  throw ParseError(std::string(field) + " must be an integer or a rational string");
}

TaggedReal tagged_from_json(const Json& value) {
  if (value.is_number_integer() || value.is_string()) {
    Rational q = rational_from_json(value, "coordinate");
    if (q.is_integer() && q.sign() >= 0) return TaggedReal::natural(q.num());
    return TaggedReal::rational(q);
  }
  if (!value.is_object()) throw ParseError("coordinate must be an object, an integer or a rational string");
  const NumberClass cls = parse_number_class(value.at("class").get<std::string>());
  const Rational offset = value.contains("offset") ? rational_from_json(value["offset"], "offset") : Rational(0);
  if (value.contains("symbol")) {
    const Rational scale = value.contains("scale") ? rational_from_json(value["scale"], "scale") : Rational(1);
    TaggedReal x = TaggedReal::symbolic(value["symbol"].get<std::string>(), scale, offset);
    if (x.number_class() != cls) {
      throw InvalidTag("symbol '" + *x.symbol() + "' is " + std::string(to_string(x.number_class())) + ", not " +
                       std::string(to_string(cls)));
    }
    return x;
  }
  switch (cls) {
    case NumberClass::natural:
      if (!offset.is_integer()) throw InvalidTag("natural coordinate " + offset.str() + " is not an integer");
      return TaggedReal::natural(offset.num());
    case NumberClass::rational: return TaggedReal::rational(offset);
    default: throw InvalidTag("an irrational coordinate needs a symbol");
  }
}

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const Interval& iv) { return Json{{"lo", iv.lo().str()}, {"hi", iv.hi().str()}}; }

Json to_json(const TaggedReal& x) {
  Json j;
  j["class"] = std::string(to_string(x.number_class()));
  if (x.symbol()) {
    j["symbol"] = *x.symbol();
    j["scale"] = x.scale().str();
  }
  j["offset"] = x.offset().str();
  return j;
}

Json to_json(const Point& p) {
  Json coords = Json::array();
  for (const auto& c : p.coords) coords.push_back(to_json(c));
  return coords;
}

Json to_json(const RationalPoint2& p) { return Json::array({p[0].str(), p[1].str()}); }

namespace {

std::size_t point_index(const Json& value, std::size_t count, const char* field) {
  if (!value.is_number_unsigned()) throw ParseError(std::string(field) + " must be a point index");
  auto i = value.get<std::size_t>();
  if (i >= count) throw OutOfRange(std::string(field) + " index " + std::to_string(i) + " has no point");
  return i;
}

RationalPoint2 rational_pair(const Json& value) {
  if (!value.is_array() || value.size() != 2) throw ParseError("excluded points are [x, y] pairs");
  return {rational_from_json(value[0], "x"), rational_from_json(value[1], "y")};
}

}  // namespace

Scene parse_scene(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("scene is not valid JSON: ") + e.what());
  }
  try {
    Scene s;
    s.dim = j.value("dim", std::size_t{2});
    if (s.dim < 2) throw OutOfRange("scene dimension must be at least 2");
    for (const auto& p : j.at("points")) {
      const Json& coords = p.is_object() ? p.at("coords") : p;
      Point pt;
      for (const auto& c : coords) pt.coords.push_back(tagged_from_json(c));
      if (pt.dim() != s.dim) throw ParseError("point " + pt.str() + " does not have " + std::to_string(s.dim) + " coordinates");
      s.points.push_back(std::move(pt));
    }
    if (j.contains("puncture")) s.puncture = parse_puncture_spec(j["puncture"].get<std::string>());
    if (j.contains("excluded")) {
      for (const auto& e : j["excluded"]) s.excluded.push_back(rational_pair(e));
    }
    if (j.contains("queries")) {
      for (const auto& q : j["queries"]) {
        SceneQuery query;
        query.from = point_index(q.at("from"), s.points.size(), "from");
        query.to = point_index(q.at("to"), s.points.size(), "to");
        if (q.contains("eps")) query.eps = rational_from_json(q["eps"], "eps");
        if (q.contains("m")) {
          Rational m = rational_from_json(q["m"], "m");
          if (!m.is_integer()) throw ParseError("grid line m must be an integer");
          query.m = m.num();
        }
        if (q.contains("via")) {
          for (const auto& v : q["via"]) query.via.push_back(point_index(v, s.points.size(), "via"));
        }
        s.queries.push_back(std::move(query));
      }
    }
    if (j.contains("bounds")) {
      const auto& b = j["bounds"];
      s.bounds = SceneBounds{rational_from_json(b.at("xmin"), "xmin"), rational_from_json(b.at("xmax"), "xmax"),
                             rational_from_json(b.at("ymin"), "ymin"), rational_from_json(b.at("ymax"), "ymax")};
      if (!(s.bounds->xmin < s.bounds->xmax) || !(s.bounds->ymin < s.bounds->ymax)) {
        throw OutOfRange("scene bounds must have positive extent");
      }
    }
    return s;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed scene: ") + e.what());
  }
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scene file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

}  // namespace cantor::cli
