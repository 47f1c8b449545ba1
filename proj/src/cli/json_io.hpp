#pragma once

#include "cantor/geometry.hpp"
#include "cantor/interval.hpp"

#include <json.hpp>

namespace cantor::cli {

using Json = nlohmann::ordered_json;

Rational rational_from_json(const Json& value, const char* field);
TaggedReal tagged_from_json(const Json& value);

Json to_json(const Rational& q);
Json to_json(const Interval& iv);
Json to_json(const TaggedReal& x);
Json to_json(const Point& p);
Json to_json(const RationalPoint2& p);

}  // namespace cantor::cli
