#pragma once

#include "cantor/rational.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace cantor {

/// Declares that every digit from position `from` onward equals `digit`.
struct ConstantTail {
  std::uint64_t from = 1;
  int digit = 0;
};

/// Lazy decimal expansion 0.d1 d2 d3 ... of a value in [0, 1).
///
/// Positions are 1-based.  A stream that declares a constant tail may not
/// declare a tail of 9s; that keeps every declared-finite expansion in
/// canonical form.
class DigitStream {
 public:
  using DigitFn = std::function<int(std::uint64_t)>;

  DigitStream(DigitFn digit_fn, std::string provenance, std::optional<ConstantTail> tail = {});

  /// Digit at position n >= 1, always in 0..9.
  int digit_at(std::uint64_t n) const;

  const std::string& provenance() const noexcept { return provenance_; }
  const std::optional<ConstantTail>& tail() const noexcept { return tail_; }

 private:
  std::shared_ptr<const DigitFn> digit_fn_;
  std::string provenance_;
  std::optional<ConstantTail> tail_;
};

/// Canonical expansion of q in [0, 1): terminating expansions continue with
/// 0s and never end in a run of 9s.  Throws OutOfRange outside [0, 1).
DigitStream rational_to_stream(const Rational& q);

/// First position n <= budget where the streams disagree, or nullopt when
/// they agree on all of 1..budget.
std::optional<std::uint64_t> locate_first_difference(const DigitStream& a, const DigitStream& b,
                                                     std::uint64_t budget);

/// Sum of digit_at(n) * 10^-n for n = 1..k.
Rational prefix_value(const DigitStream& s, std::uint64_t k);

}  // namespace cantor
