#include "cantor/function_family.hpp"

#include "cantor/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>

namespace cantor {

namespace {

bool is_power_of_two(const BigInt& v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

FunctionFamily::FunctionFamily(std::vector<Rational> grid, const Rule& rule) : grid_(std::move(grid)) {
  if (grid_.empty()) throw OutOfRange("function family needs a nonempty grid");
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    const Rational& p = grid_[i];
    if (p.sign() < 0 || p >= Rational(1) || !is_power_of_two(p.den())) {
      throw OutOfRange("grid point " + p.str() + " is not a dyadic rational in [0, 1)");
    }
    if (i > 0 && !(grid_[i - 1] < p)) throw OutOfRange("grid must be strictly increasing");
  }
  const std::size_t n = grid_.size();
  values_.resize(n * n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      std::int64_t v = rule(y, x);
      if (v == std::numeric_limits<std::int64_t>::max()) throw OutOfRange("family value leaves no room for +1");
      values_[y * n + x] = v;
    }
  }
}

std::vector<Rational> FunctionFamily::dyadic_grid(unsigned depth) {
  if (depth > 20) throw OutOfRange("dyadic depth above 20 is not supported");
  const std::uint64_t count = std::uint64_t{1} << depth;
  std::vector<Rational> grid;
  grid.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) grid.emplace_back(BigInt(i), BigInt(count));
  return grid;
}

std::optional<std::size_t> FunctionFamily::index_of(const Rational& point) const {
  auto it = std::lower_bound(grid_.begin(), grid_.end(), point);
  if (it == grid_.end() || *it != point) return std::nullopt;
  return static_cast<std::size_t>(it - grid_.begin());
}

std::vector<std::int64_t> build_escape_function(const FunctionFamily& family) {
  std::vector<std::int64_t> g(family.size());
  for (std::size_t y = 0; y < family.size(); ++y) g[y] = family.at(y, y) + 1;
  return g;
}

EscapeVerdict verify_escape(const FunctionFamily& family, const std::vector<std::int64_t>& g) {
  if (g.size() != family.size()) throw OutOfRange("escape function does not match the family grid");
  for (std::size_t y = 0; y < family.size(); ++y) {
    if (g[y] == family.at(y, y)) return {false, y};
  }
  return {true, std::nullopt};
}

namespace {

// Union-find over integer unknowns where each node stores
// value(node) - value(parent).
class DifferenceSolver {
 public:
  explicit DifferenceSolver(std::size_t n) : parent_(n), potential_(n, 0), adjacency_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }

  struct Conflict {
    std::size_t constraint;
    std::int64_t implied;  // value(lhs) - value(rhs) implied by earlier constraints
  };

  std::optional<Conflict> add(const std::vector<Constraint>& all, std::size_t index) {
    const Constraint& c = all[index];
    auto [ra, pa] = find(c.lhs);
    auto [rb, pb] = find(c.rhs);
    if (ra == rb) {
      if (pa - pb != c.offset) return Conflict{index, pa - pb};
      return std::nullopt;
    }
    parent_[ra] = rb;
    potential_[ra] = c.offset - pa + pb;
    adjacency_[c.lhs].push_back({c.rhs, index});
    adjacency_[c.rhs].push_back({c.lhs, index});
    return std::nullopt;
  }

  std::int64_t value(std::size_t v) { return find(v).second; }

  // Constraints on the spanning-forest path between two connected nodes.
  std::vector<std::size_t> path(std::size_t from, std::size_t to) const {
    std::vector<std::pair<std::size_t, std::size_t>> prev(parent_.size(), {SIZE_MAX, SIZE_MAX});
    std::deque<std::size_t> queue{from};
    prev[from] = {from, SIZE_MAX};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      if (v == to) break;
      for (auto [w, ci] : adjacency_[v]) {
        if (prev[w].first != SIZE_MAX) continue;
        prev[w] = {v, ci};
        queue.push_back(w);
      }
    }
    std::vector<std::size_t> out;
    for (std::size_t v = to; v != from; v = prev[v].first) out.push_back(prev[v].second);
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  std::pair<std::size_t, std::int64_t> find(std::size_t v) {
    if (parent_[v] == v) return {v, 0};
    auto [root, p] = find(parent_[v]);
    potential_[v] += p;
    parent_[v] = root;
    return {root, potential_[v]};
  }

  std::vector<std::size_t> parent_;
  std::vector<std::int64_t> potential_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency_;
};

}  // namespace

SelfReferenceVerdict self_reference_check(unsigned depth, bool with_self_reference) {
  if (depth < 1) throw OutOfRange("depth must be at least 1");
  const std::vector<Rational> grid = FunctionFamily::dyadic_grid(depth);
  const std::size_t n = grid.size();
  auto g_var = [](std::size_t y) { return y; };
  auto f_var = [n](std::size_t y, std::size_t x) { return n + y * n + x; };
  auto g_name = [&](std::size_t y) { return "g(" + grid[y].str() + ")"; };
  auto f_name = [&](std::size_t y, std::size_t x) { return "f_{" + grid[y].str() + "}(" + grid[x].str() + ")"; };

  std::vector<Constraint> constraints;
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> origin;  // (y, image of y) for self-references
  for (std::size_t y = 0; y < n; ++y) {
    constraints.push_back({g_var(y), f_var(y, y), 1, g_name(y) + " = " + f_name(y, y) + " + 1"});
    origin.emplace_back();
  }
  if (with_self_reference) {
    // (1 + i/n) / 2 = (n + i) / 2n is on the grid iff n + i is even.
    for (std::size_t y = 0; y < n; ++y) {
      if ((n + y) % 2 != 0) continue;
      const std::size_t image = (n + y) / 2;
      for (std::size_t x = 0; x < n; ++x) {
        constraints.push_back({f_var(image, x), g_var(x), 0, f_name(image, x) + " = " + g_name(x)});
        origin.emplace_back(std::pair{y, image});
      }
    }
  }

  SelfReferenceVerdict verdict;
  verdict.depth = depth;
  verdict.with_self_reference = with_self_reference;
  verdict.variables = n + n * n;
  verdict.constraints = constraints.size();

  DifferenceSolver solver(verdict.variables);
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    auto conflict = solver.add(constraints, i);
    if (!conflict) continue;
    const Constraint& c = constraints[i];
    SelfReferenceWitness w;
    for (std::size_t ci : solver.path(c.lhs, c.rhs)) w.chain.push_back(constraints[ci].label);
    w.chain.push_back(c.label);
    std::optional<std::pair<std::size_t, std::size_t>> where = origin[i];
    if (!where) {
      for (std::size_t ci : solver.path(c.lhs, c.rhs)) {
        if (origin[ci]) where = origin[ci];
      }
    }
    if (where) {
      w.y = grid[where->first];
      w.y_image = grid[where->second];
    }
    // value(rhs) = value(rhs) + (offset - implied) once both routes are combined
    const std::int64_t delta = c.offset - conflict->implied;
    const std::string subject = c.rhs < n ? g_name(c.rhs) : f_name((c.rhs - n) / n, (c.rhs - n) % n);
    w.forced = subject + " = " + subject + (delta >= 0 ? " + " : " - ") + std::to_string(delta >= 0 ? delta : -delta);
    verdict.satisfiable = false;
    verdict.witness = std::move(w);
    return verdict;
  }

  std::vector<std::int64_t> values(verdict.variables);
  for (std::size_t v = 0; v < values.size(); ++v) values[v] = solver.value(v);
  for (const Constraint& c : constraints) {
    if (values[c.lhs] - values[c.rhs] != c.offset) throw Error("difference solver produced an inconsistent assignment");
  }
  verdict.satisfiable = true;
  verdict.g_values.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n));
  return verdict;
}

}  // namespace cantor
