#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cantor {

using BigInt = boost::multiprecision::cpp_int;

/// Exact ratio of two arbitrary-precision integers.
///
/// Always stored in lowest terms with a strictly positive denominator, so
/// structural equality is value equality.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(BigInt value) : num_(std::move(value)) {}
  Rational(BigInt num, BigInt den);

  /// Accepts "p/q", signed integers and plain decimal literals ("-0.125").
  static Rational parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  int sign() const noexcept { return num_.sign(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }

  /// Largest integer not above the value.
  BigInt floor() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// "num/den", or just "num" for integers.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// 10^exponent, exact for negative exponents too.
Rational pow10(long long exponent);

/// Fixed-point decimal rendering with `places` fractional digits, rounded
/// half away from zero.  Used for display only.
std::string to_fixed(const Rational& q, unsigned places);

struct RationalHash {
  std::size_t operator()(const Rational& q) const noexcept;
};

}  // namespace cantor
