#include "cantor/digit_stream.hpp"

#include "cantor/errors.hpp"

#include <boost/multiprecision/integer.hpp>

namespace cantor {

DigitStream::DigitStream(DigitFn digit_fn, std::string provenance, std::optional<ConstantTail> tail)
    : digit_fn_(std::make_shared<const DigitFn>(std::move(digit_fn))),
      provenance_(std::move(provenance)),
      tail_(tail) {
  if (tail_) {
    if (tail_->from < 1 || tail_->digit < 0 || tail_->digit > 8) {
      throw OutOfRange("digit stream '" + provenance_ + "' declares a non-canonical tail");
    }
  }
}

int DigitStream::digit_at(std::uint64_t n) const {
  if (n < 1) throw OutOfRange("digit positions start at 1");
  if (tail_ && n >= tail_->from) return tail_->digit;
  int d = (*digit_fn_)(n);
  if (d < 0 || d > 9) throw OutOfRange("digit stream '" + provenance_ + "' produced a non-digit");
  return d;
}

namespace {

// Number of decimal places after which q's expansion terminates, if it does.
std::optional<std::uint64_t> terminating_length(const BigInt& den) {
  BigInt d = den;
  std::uint64_t twos = 0;
  std::uint64_t fives = 0;
  while (boost::multiprecision::bit_test(d, 0) == false) {
    d >>= 1;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return std::nullopt;
  return std::max(twos, fives);
}

}  // namespace

DigitStream rational_to_stream(const Rational& q) {
  if (q.sign() < 0 || q >= Rational(1)) {
    throw OutOfRange("rational_to_stream needs 0 <= q < 1, got " + q.str());
  }
  BigInt num = q.num();
  BigInt den = q.den();
  std::optional<ConstantTail> tail;
  if (auto len = terminating_length(den)) tail = ConstantTail{*len + 1, 0};

  // digit n = floor(10 * r_{n-1} / den) with r_{n-1} = num * 10^(n-1) mod den
  auto fn = [num, den](std::uint64_t n) -> int {
    BigInt r = boost::multiprecision::powm(BigInt(10), BigInt(n - 1), den);
    r = (r * num) % den;
    return static_cast<int>((10 * r) / den);
  };
  return DigitStream(std::move(fn), "rational " + q.str(), tail);
}

std::optional<std::uint64_t> locate_first_difference(const DigitStream& a, const DigitStream& b,
                                                     std::uint64_t budget) {
  if (budget < 1) throw OutOfRange("comparison budget must be positive");
  for (std::uint64_t n = 1; n <= budget; ++n) {
    if (a.digit_at(n) != b.digit_at(n)) return n;
  }
  return std::nullopt;
}

Rational prefix_value(const DigitStream& s, std::uint64_t k) {
  if (k < 1) throw OutOfRange("prefix length must be positive");
  BigInt acc = 0;
  for (std::uint64_t n = 1; n <= k; ++n) acc = acc * 10 + s.digit_at(n);
  return Rational(acc, boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(k)));
}

}  // namespace cantor
