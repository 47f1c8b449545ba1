#pragma once

#include "cantor/rational.hpp"

#include <string>
#include <string_view>

namespace cantor {

/// Open interval (lo, hi) with exact endpoints; lo < hi always.
class Interval {
 public:
  Interval(Rational lo, Rational hi);

  /// Parses "lo,hi" with rational literals on both sides, e.g. "-1,1/2".
  static Interval parse(std::string_view text);

  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }

  /// Strict membership; endpoints are outside.
  bool contains(const Rational& x) const { return lo_ < x && x < hi_; }

  /// True when both endpoints lie strictly inside `outer`.
  bool strictly_inside(const Interval& outer) const {
    return outer.contains(lo_) && outer.contains(hi_);
  }

  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / Rational(2); }

  std::string str() const { return "(" + lo_.str() + ", " + hi_.str() + ")"; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

}  // namespace cantor
