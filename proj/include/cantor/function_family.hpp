#pragma once

#include "cantor/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cantor {

/// Integer-valued functions f_y(x) on a finite grid of dyadic rationals in
/// [0, 1), one function per grid point y.
class FunctionFamily {
 public:
  using Rule = std::function<std::int64_t(std::size_t y_index, std::size_t x_index)>;

  /// `grid` must be nonempty, strictly increasing, dyadic and inside [0, 1).
  FunctionFamily(std::vector<Rational> grid, const Rule& rule);

  /// {i / 2^depth : 0 <= i < 2^depth}.
  static std::vector<Rational> dyadic_grid(unsigned depth);

  const std::vector<Rational>& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return grid_.size(); }
  std::int64_t at(std::size_t y_index, std::size_t x_index) const { return values_[y_index * grid_.size() + x_index]; }
  std::optional<std::size_t> index_of(const Rational& point) const;

 private:
  std::vector<Rational> grid_;
  std::vector<std::int64_t> values_;
};

/// g(y) = f_y(y) + 1 at every grid point, indexed like the grid.
std::vector<std::int64_t> build_escape_function(const FunctionFamily& family);

struct EscapeVerdict {
  bool escapes_everywhere = false;
  std::optional<std::size_t> first_failure;  // grid index where g(y) == f_y(y)
};

/// Checks g(y) != f_y(y) at every grid point.
EscapeVerdict verify_escape(const FunctionFamily& family, const std::vector<std::int64_t>& g);

/// One equation value(lhs) - value(rhs) = offset of the constraint system.
struct Constraint {
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  std::int64_t offset = 0;
  std::string label;
};

/// Forced contradiction found in the self-referential system.
struct SelfReferenceWitness {
  Rational y;        // grid point whose image (1 + y) / 2 is also on the grid
  Rational y_image;  // (1 + y) / 2
  std::vector<std::string> chain;  // constraints closing the inconsistent cycle
  std::string forced;              // e.g. "g(1/2) = g(1/2) + 1"
};

struct SelfReferenceVerdict {
  unsigned depth = 0;
  bool with_self_reference = true;
  bool satisfiable = false;
  std::size_t variables = 0;
  std::size_t constraints = 0;
  std::optional<SelfReferenceWitness> witness;  // when unsatisfiable
  /// A satisfying assignment, checked against every constraint, when
  /// satisfiable: g values on the grid.
  std::vector<std::int64_t> g_values;
};

/// On the dyadic grid of `depth`, encodes g(y) = f_y(y) + 1 for every y and,
/// when `with_self_reference`, f_{(1+y)/2}(x) = g(x) for every x and every y
/// with (1 + y) / 2 on the grid; then decides satisfiability over the
/// integers by propagating the difference equations.
SelfReferenceVerdict self_reference_check(unsigned depth, bool with_self_reference = true);

}  // namespace cantor
