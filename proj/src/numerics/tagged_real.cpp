#include "cantor/tagged_real.hpp"

#include "cantor/errors.hpp"

#include <algorithm>

namespace cantor {

std::string_view to_string(NumberClass c) {
  switch (c) {
    case NumberClass::natural: return "natural";
    case NumberClass::rational: return "rational";
    case NumberClass::algebraic_irrational: return "algebraic_irrational";
    case NumberClass::transcendental: return "transcendental";
  }
  return "?";
}

NumberClass parse_number_class(std::string_view text) {
  if (text == "natural") return NumberClass::natural;
  if (text == "rational") return NumberClass::rational;
  if (text == "algebraic_irrational" || text == "algebraic-irrational") return NumberClass::algebraic_irrational;
  if (text == "transcendental") return NumberClass::transcendental;
  throw ParseError("unknown number class '" + std::string(text) + "'");
}

const std::vector<SymbolInfo>& symbol_registry() {
  static const std::vector<SymbolInfo> registry = {
      {"pi", NumberClass::transcendental, Rational(3), Rational(4), Rational(355, 113)},
      {"e", NumberClass::transcendental, Rational(2), Rational(3), Rational(2721, 1001)},
      {"sqrt2", NumberClass::algebraic_irrational, Rational(1), Rational(2), Rational(99, 70)},
  };
  return registry;
}

const SymbolInfo& lookup_symbol(std::string_view name) {
  const auto& registry = symbol_registry();
  auto it = std::find_if(registry.begin(), registry.end(), [&](const SymbolInfo& s) { return s.name == name; });
  if (it == registry.end()) throw InvalidTag("unknown symbol '" + std::string(name) + "'");
  return *it;
}

TaggedReal TaggedReal::natural(BigInt n) {
  if (n.sign() < 0) throw InvalidTag("natural coordinate must be non-negative, got " + n.str());
  TaggedReal t;
  t.class_ = NumberClass::natural;
  t.offset_ = Rational(std::move(n));
  t.render_approx_ = t.offset_;
  return t;
}

TaggedReal TaggedReal::rational(Rational q) {
  TaggedReal t;
  t.class_ = NumberClass::rational;
  t.offset_ = std::move(q);
  t.render_approx_ = t.offset_;
  return t;
}

TaggedReal TaggedReal::symbolic(std::string_view symbol, Rational scale, Rational offset) {
  const SymbolInfo& info = lookup_symbol(symbol);
  if (scale.is_zero()) throw InvalidTag("symbolic coordinate needs a nonzero scale");
  TaggedReal t;
  t.class_ = info.kind;
  t.symbol_ = info.name;
  t.scale_ = std::move(scale);
  t.offset_ = std::move(offset);
  t.render_approx_ = t.offset_ + t.scale_ * info.approx;
  return t;
}

std::optional<Rational> TaggedReal::exact_value() const {
  if (symbol_) return std::nullopt;
  return offset_;
}

TaggedReal TaggedReal::affine(const Rational& s, const Rational& q) const {
  if (s.is_zero()) throw InvalidTag("affine map needs a nonzero scale");
  if (!symbol_) return rational(s * offset_ + q);
  return symbolic(*symbol_, s * scale_, s * offset_ + q);
}

bool TaggedReal::same_value(const TaggedReal& other) const {
  if (!symbol_ && !other.symbol_) return offset_ == other.offset_;
  if (symbol_ && other.symbol_ && *symbol_ == *other.symbol_) {
    return scale_ == other.scale_ && offset_ == other.offset_;
  }
  return false;
}

Rational TaggedReal::lower_bound() const {
  if (!symbol_) return offset_;
  const SymbolInfo& info = lookup_symbol(*symbol_);
  return offset_ + (scale_.sign() > 0 ? scale_ * info.lower : scale_ * info.upper);
}

Rational TaggedReal::upper_bound() const {
  if (!symbol_) return offset_;
  const SymbolInfo& info = lookup_symbol(*symbol_);
  return offset_ + (scale_.sign() > 0 ? scale_ * info.upper : scale_ * info.lower);
}

std::string TaggedReal::str() const {
  if (!symbol_) return offset_.str();
  std::string out;
  if (!offset_.is_zero()) out = offset_.str() + " + ";
  out += scale_.str() + "*" + *symbol_;
  return out;
}

TaggedReal shifted_transcendental(const Rational& target, const Rational& radius) {
  if (radius.sign() <= 0) throw OutOfRange("radius must be positive");
  const SymbolInfo& pi = lookup_symbol("pi");
  long long j = 0;
  if (pi.upper < radius) {
    while (pow10(-(j - 1)) * pi.upper < radius) --j;
  } else {
    while (!(pow10(-j) * pi.upper < radius)) ++j;
  }
  return TaggedReal::symbolic(pi.name, pow10(-j), target);
}

}  // namespace cantor
