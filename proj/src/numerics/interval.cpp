#include "cantor/interval.hpp"

#include "cantor/errors.hpp"

namespace cantor {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ < hi_)) throw InvalidInterval("interval needs lo < hi, got " + str());
}

Interval Interval::parse(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError("interval must be written as 'lo,hi', got '" + std::string(text) + "'");
  }
  return Interval(Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1)));
}

}  // namespace cantor
