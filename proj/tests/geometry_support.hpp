#pragma once

#include "cantor/geometry.hpp"
#include "support.hpp"

namespace cantor::test {

inline TaggedReal nat(long long n) { return TaggedReal::natural(BigInt(n)); }
inline TaggedReal rat(const char* q) { return TaggedReal::rational(Rational::parse(q)); }
inline TaggedReal sym(const char* name, const char* scale, const char* offset) {
  return TaggedReal::symbolic(name, Rational::parse(scale), Rational::parse(offset));
}
inline Point pt(std::vector<TaggedReal> coords) { return Point{std::move(coords)}; }

/// Random coordinate of the requested class.
inline TaggedReal coordinate(Gen& gen, NumberClass cls) {
  switch (cls) {
    case NumberClass::natural: return TaggedReal::natural(BigInt(gen.integer(0, 20)));
    case NumberClass::rational: return TaggedReal::rational(gen.rational(200, 16));
    case NumberClass::algebraic_irrational:
      return TaggedReal::symbolic("sqrt2", Rational(BigInt(gen.integer(1, 9)), BigInt(gen.integer(1, 4))) *
                                               Rational(gen.coin() ? 1 : -1),
                                  gen.rational(100, 8));
    case NumberClass::transcendental:
      return TaggedReal::symbolic(gen.coin() ? "pi" : "e",
                                  Rational(BigInt(gen.integer(1, 9)), BigInt(gen.integer(1, 4))) *
                                      Rational(gen.coin() ? 1 : -1),
                                  gen.rational(100, 8));
  }
  return {};
}

inline NumberClass any_class(Gen& gen) { return static_cast<NumberClass>(gen.integer(0, 3)); }

/// Random point of dimension n with at least one coordinate exempt under spec.
inline Point exempt_point(Gen& gen, std::size_t n, PunctureSpec spec) {
  Point p;
  for (std::size_t i = 0; i < n; ++i) p.coords.push_back(coordinate(gen, any_class(gen)));
  const std::size_t forced = static_cast<std::size_t>(gen.integer(0, static_cast<std::int64_t>(n) - 1));
  switch (spec) {
    case PunctureSpec::purely_algebraic:
      if (is_punctured(p, spec)) p.coords[forced] = coordinate(gen, NumberClass::transcendental);
      break;
    case PunctureSpec::purely_transcendental:
      if (is_punctured(p, spec)) p.coords[forced] = coordinate(gen, static_cast<NumberClass>(gen.integer(0, 2)));
      break;
    case PunctureSpec::purely_non_natural: p.coords[0] = coordinate(gen, NumberClass::natural); break;
  }
  return p;
}

}  // namespace cantor::test
