#pragma once

#include "cantor/digit_stream.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cantor {

/// Row n (n >= 1) of the list whose rows are 0.11...1000... with n - 1 ones:
/// r1 = 0.000..., r2 = 0.1000..., r3 = 0.11000...
DigitStream ones_row(std::uint64_t n);

/// An injective list of digit streams, rows indexed from 1.
class ListView {
 public:
  using RowFn = std::function<DigitStream(std::uint64_t)>;

  ListView(RowFn row_fn, std::string name, std::optional<std::uint64_t> size = std::nullopt);

  /// Rows ones_row(1), ones_row(2), ...
  static ListView ones_list();

  /// Rows are the canonical expansions of the given values in [0, 1).
  /// Throws NotInjective on a repeated value.
  static ListView from_rationals(std::vector<Rational> values, std::string name = "list");

  /// List file: either the single keyword "ones" / "table2" or one rational
  /// literal per line ('#' comments allowed).
  static ListView from_file(const std::filesystem::path& path);

  DigitStream row_at(std::uint64_t n) const;
  const std::string& name() const noexcept { return name_; }
  const std::optional<std::uint64_t>& size() const noexcept { return size_; }

 private:
  std::shared_ptr<const RowFn> row_fn_;
  std::string name_;
  std::optional<std::uint64_t> size_;
};

/// Digit substitution a -> map(a) with map(a) != a and 1 <= map(a) <= 8.
class ReplacementRule {
 public:
  explicit ReplacementRule(std::array<int, 10> map);

  /// a -> 1 for a != 1, and 1 -> 2.
  static ReplacementRule standard();

  /// "default", or ten digits where the a-th character is map(a).
  static ReplacementRule parse(std::string_view text);

  int apply(int digit) const;
  const std::array<int, 10>& table() const noexcept { return map_; }
  std::string str() const;

 private:
  std::array<int, 10> map_;
};

/// Digits b_n = rule(row_n.digit_at(n)) for n = 1..k.
std::vector<int> build_diagonal(const ListView& list, const ReplacementRule& rule, std::uint64_t k);

/// The whole diagonal as a lazy stream.
DigitStream diagonal_stream(const ListView& list, const ReplacementRule& rule);

/// First position where `diagonal` differs from row n, searching the
/// whole prefix.  Throws NoDifferenceWithinPrefix when none is found.
std::uint64_t locate_escape(const ListView& list, const std::vector<int>& diagonal, std::uint64_t n);

/// The first n digits of the diagonal against row n + 1 of the ones list.
struct PrefixIdentityVerdict {
  std::uint64_t n = 0;
  bool holds = false;                      // digits 1..n agree
  std::uint64_t agreeing_places = 0;       // length of the common prefix
  std::optional<std::uint64_t> divergence;  // first differing place (n + 1 expected)
};

PrefixIdentityVerdict ones_list_prefix_identity(std::uint64_t n,
                                                const ReplacementRule& rule = ReplacementRule::standard());

struct LimitVerdict {
  std::uint64_t k = 0;
  Rational prefix;    // prefix_value(diagonal, k)
  Rational distance;  // |prefix - 1/9|
  bool bound_holds = false;  // distance <= 10^-k
  std::vector<std::uint64_t> escape_positions;  // locate_escape(n) for n = 1..k
  bool all_escape_at_diagonal = false;          // escape_positions[n-1] == n for every n
};

/// Diagonal of the ones list under the standard rule: the k-digit prefix is
/// within 10^-k of 1/9 and the diagonal escapes every row n <= k at place n.
LimitVerdict ones_list_limit_check(std::uint64_t k);

}  // namespace cantor
