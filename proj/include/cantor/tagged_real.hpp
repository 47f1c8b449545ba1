#pragma once

#include "cantor/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cantor {

enum class NumberClass { natural, rational, algebraic_irrational, transcendental };

std::string_view to_string(NumberClass c);
NumberClass parse_number_class(std::string_view text);

/// True for natural, rational and algebraic-irrational.
constexpr bool is_algebraic(NumberClass c) { return c != NumberClass::transcendental; }

/// A named irrational generator with declared valuation bounds.
///
/// `lower < value < upper` is all validation code may rely on; `approx` is a
/// fixed rational convergent used only for rendering.
struct SymbolInfo {
  std::string name;
  NumberClass kind;
  Rational lower;
  Rational upper;
  Rational approx;
};

/// Registered generators: "pi" (transcendental, in (3, 4)), "e"
/// (transcendental, in (2, 3)) and "sqrt2" (algebraic-irrational, in (1, 2)).
const SymbolInfo& lookup_symbol(std::string_view name);
const std::vector<SymbolInfo>& symbol_registry();

/// A real coordinate whose number class is fixed by construction.
///
/// Value = offset + scale * symbol when a symbol is present, else offset.
/// The class is never computed numerically.
class TaggedReal {
 public:
  /// Rational zero.
  TaggedReal() = default;

  static TaggedReal natural(BigInt n);
  static TaggedReal rational(Rational q);
  /// Class follows the symbol's declared kind; scale must be nonzero.
  static TaggedReal symbolic(std::string_view symbol, Rational scale, Rational offset);

  NumberClass number_class() const noexcept { return class_; }
  const std::optional<std::string>& symbol() const noexcept { return symbol_; }
  const Rational& scale() const noexcept { return scale_; }
  const Rational& offset() const noexcept { return offset_; }
  /// Plot-only approximation; never consulted by validation.
  const Rational& render_approx() const noexcept { return render_approx_; }

  bool is_symbolic() const noexcept { return symbol_.has_value(); }

  /// Exact value when there is no symbol.
  std::optional<Rational> exact_value() const;

  /// s * x + q for nonzero s.  Irrational classes are preserved; natural
  /// inputs come back tagged rational.
  TaggedReal affine(const Rational& s, const Rational& q) const;

  /// Value equality decidable from the representation: symbol-free values
  /// compare exactly, same-symbol values compare scale and offset, anything
  /// else is treated as distinct.
  bool same_value(const TaggedReal& other) const;

  /// Strict lower/upper bounds of the value derived from the symbol bounds.
  Rational lower_bound() const;
  Rational upper_bound() const;

  std::string str() const;

  friend bool operator==(const TaggedReal&, const TaggedReal&) = default;

 private:
  NumberClass class_ = NumberClass::rational;
  std::optional<std::string> symbol_;
  Rational scale_{0};
  Rational offset_{0};
  Rational render_approx_{0};
};

/// A transcendental value within `radius` of `target`: offset = target and
/// scale = 10^-j for the smallest integer j with scale * 4 < radius, using
/// the generator "pi" whose declared upper bound is 4.
TaggedReal shifted_transcendental(const Rational& target, const Rational& radius);

}  // namespace cantor
