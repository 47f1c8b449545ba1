#include "cantor/rational.hpp"

#include "cantor/errors.hpp"

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <ostream>

namespace cantor {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

BigInt parse_unsigned(std::string_view digits) {
  BigInt value = 0;
  for (char c : digits) value = value * 10 + (c - '0');
  return value;
}

BigInt pow10_int(unsigned exponent) {
  return boost::multiprecision::pow(BigInt(10), exponent);
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw OutOfRange("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  const std::string original(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto p = s.substr(0, slash);
    auto q = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) throw ParseError("malformed rational literal '" + original + "'");
    BigInt den = parse_unsigned(q);
    if (den.is_zero()) throw ParseError("zero denominator in '" + original + "'");
    result = Rational(parse_unsigned(p), den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw ParseError("malformed decimal literal '" + original + "'");
    }
    BigInt scale = pow10_int(static_cast<unsigned>(frac.size()));
    BigInt value = (whole.empty() ? BigInt(0) : parse_unsigned(whole)) * scale +
                   (frac.empty() ? BigInt(0) : parse_unsigned(frac));
    result = Rational(value, scale);
  } else {
    if (!all_digits(s)) throw ParseError("malformed rational literal '" + original + "'");
    result = Rational(parse_unsigned(s));
  }
  return negative ? -result : result;
}

BigInt Rational::floor() const {
  BigInt q = num_ / den_;  // truncates toward zero
  if (num_.sign() < 0 && q * den_ != num_) q -= 1;
  return q;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw OutOfRange("division by zero");
  BigInt n = num_ * rhs.den_;
  BigInt d = den_ * rhs.num_;
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) {
    return a.num_ == b.num_ ? std::strong_ordering::equal
           : a.num_ < b.num_ ? std::strong_ordering::less
                             : std::strong_ordering::greater;
  }
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  return lhs == rhs ? std::strong_ordering::equal
         : lhs < rhs ? std::strong_ordering::less
                     : std::strong_ordering::greater;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational pow10(long long exponent) {
  if (exponent >= 0) return Rational(pow10_int(static_cast<unsigned>(exponent)));
  return Rational(BigInt(1), pow10_int(static_cast<unsigned>(-exponent)));
}

std::string to_fixed(const Rational& q, unsigned places) {
  BigInt scale = pow10_int(places);
  BigInt scaled_num = q.num().sign() < 0 ? BigInt(-q.num()) : q.num();
  // round(|q| * 10^places), half away from zero
  BigInt rounded = (2 * scaled_num * scale + q.den()) / (2 * q.den());
  std::string digits = rounded.str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out;
  if (q.sign() < 0 && !rounded.is_zero()) out.push_back('-');
  out += digits.substr(0, digits.size() - places);
  if (places > 0) {
    out.push_back('.');
    out += digits.substr(digits.size() - places);
  }
  return out;
}

std::size_t RationalHash::operator()(const Rational& q) const noexcept {
  std::size_t seed = boost::multiprecision::hash_value(q.num());
  boost::hash_combine(seed, boost::multiprecision::hash_value(q.den()));
  return seed;
}

}  // namespace cantor
