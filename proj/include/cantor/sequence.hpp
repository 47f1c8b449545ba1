#pragma once

#include "cantor/interval.hpp"
#include "cantor/rational.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cantor {

/// (-1)^nu / nu for nu >= 1.
Rational harmonic_term(std::uint64_t nu);

/// Position of x in the enumeration 0 -> 1, harmonic_term(nu) -> nu + 1.
/// Throws NotAMember for anything else.
std::uint64_t bijection_index(const Rational& x);

/// A 1-indexed sequence of rationals omega_1, omega_2, ...
///
/// Sources are immutable and may be shared across threads.  Finite sources
/// return nullopt past their last term.
class SequenceSource {
 public:
  enum class Kind { harmonic, rationals_in, from_file, custom };

  class Impl;

  static SequenceSource harmonic();

  /// Every rational of `iv` exactly once: diagonals d = p + q = 1, 2, ...,
  /// q ascending within a diagonal, reduced fractions only, +p/q before
  /// -p/q, filtered to the open interval.
  static SequenceSource rationals_in(const Interval& iv);

  /// Finite list; throws NotInjective on a repeated value.
  static SequenceSource from_terms(std::vector<Rational> terms, std::string name = "list");

  /// One rational literal per line, '#' starts a comment, blank lines
  /// ignored.  Throws NotInjective on duplicates and ParseError on bad lines.
  static SequenceSource from_file(const std::filesystem::path& path);

  /// Arbitrary rule; injectivity is checked only where the sequence is used.
  static SequenceSource from_function(std::function<std::optional<Rational>(std::uint64_t)> fn,
                                      std::string name);

  Kind kind() const;
  std::string describe() const;

  /// Term at 1-based index, nullopt past the end of a finite source.
  std::optional<Rational> term_at(std::uint64_t index) const;

  /// Number of terms of a finite source.
  std::optional<std::uint64_t> size() const;

  /// True when repeated values are impossible by construction.
  bool injective_by_construction() const;

 private:
  explicit SequenceSource(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace cantor
