#include "cantor/diagonal.hpp"

#include "cantor/errors.hpp"

#include <fstream>
#include <unordered_set>

namespace cantor {

DigitStream ones_row(std::uint64_t n) {
  if (n < 1) throw OutOfRange("list rows start at 1");
  return DigitStream([](std::uint64_t) { return 1; }, "ones_row " + std::to_string(n), ConstantTail{n, 0});
}

ListView::ListView(RowFn row_fn, std::string name, std::optional<std::uint64_t> size)
    : row_fn_(std::make_shared<const RowFn>(std::move(row_fn))), name_(std::move(name)), size_(size) {}

ListView ListView::ones_list() { return ListView(ones_row, "ones"); }

ListView ListView::from_rationals(std::vector<Rational> values, std::string name) {
  std::unordered_set<Rational, RationalHash> seen;
  std::vector<DigitStream> rows;
  rows.reserve(values.size());
  for (const auto& v : values) {
    if (!seen.insert(v).second) throw NotInjective(name + ": row value " + v.str() + " repeats");
    rows.push_back(rational_to_stream(v));
  }
  const auto size = rows.size();
  auto shared = std::make_shared<const std::vector<DigitStream>>(std::move(rows));
  return ListView(
      [shared](std::uint64_t n) {
        if (n < 1 || n > shared->size()) throw OutOfRange("list has no row " + std::to_string(n));
        return (*shared)[n - 1];
      },
      std::move(name), size);
}

ListView ListView::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open list file '" + path.string() + "'");
  std::vector<Rational> values;
  std::string line;
  bool keyword = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    std::string token = line.substr(b, e - b + 1);
    if (token == "table2" || token == "ones") {
      keyword = true;
      continue;
    }
    try {
      values.push_back(Rational::parse(token));
    } catch (const ParseError& err) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " + err.what());
    }
  }
  if (keyword) {
    if (!values.empty()) throw ParseError(path.string() + ": the ones-list keyword cannot be mixed with rows");
    return ones_list();
  }
  return from_rationals(std::move(values), "file:" + path.filename().string());
}

DigitStream ListView::row_at(std::uint64_t n) const {
  if (n < 1) throw OutOfRange("list rows start at 1");
  return (*row_fn_)(n);
}

ReplacementRule::ReplacementRule(std::array<int, 10> map) : map_(map) {
  for (int a = 0; a < 10; ++a) {
    if (map_[a] == a || map_[a] < 1 || map_[a] > 8) {
      throw InvalidRule("replacement rule maps " + std::to_string(a) + " to " + std::to_string(map_[a]) +
                        "; need a different digit in 1..8");
    }
  }
}

ReplacementRule ReplacementRule::standard() { return ReplacementRule({1, 2, 1, 1, 1, 1, 1, 1, 1, 1}); }

ReplacementRule ReplacementRule::parse(std::string_view text) {
  if (text == "default" || text == "standard") return standard();
  if (text.size() != 10) throw InvalidRule("rule must be 'default' or ten digits, got '" + std::string(text) + "'");
  std::array<int, 10> map{};
  for (int a = 0; a < 10; ++a) {
    char c = text[a];
    if (c < '0' || c > '9') throw InvalidRule("rule must consist of digits, got '" + std::string(text) + "'");
    map[a] = c - '0';
  }
  return ReplacementRule(map);
}

int ReplacementRule::apply(int digit) const {
  if (digit < 0 || digit > 9) throw OutOfRange("not a decimal digit");
  return map_[digit];
}

std::string ReplacementRule::str() const {
  std::string out;
  for (int d : map_) out.push_back(static_cast<char>('0' + d));
  return out;
}

std::vector<int> build_diagonal(const ListView& list, const ReplacementRule& rule, std::uint64_t k) {
  if (k < 1) throw OutOfRange("diagonal length must be positive");
  if (list.size() && k > *list.size()) {
    throw OutOfRange("list '" + list.name() + "' has only " + std::to_string(*list.size()) + " rows");
  }
  std::vector<int> digits;
  digits.reserve(k);
  for (std::uint64_t n = 1; n <= k; ++n) digits.push_back(rule.apply(list.row_at(n).digit_at(n)));
  return digits;
}

DigitStream diagonal_stream(const ListView& list, const ReplacementRule& rule) {
  return DigitStream([list, rule](std::uint64_t n) { return rule.apply(list.row_at(n).digit_at(n)); },
                     "diagonal of " + list.name() + " under rule " + rule.str());
}

std::uint64_t locate_escape(const ListView& list, const std::vector<int>& diagonal, std::uint64_t n) {
  if (n < 1 || n > diagonal.size()) throw OutOfRange("row index outside the diagonal prefix");
  DigitStream row = list.row_at(n);
  for (std::uint64_t pos = 1; pos <= diagonal.size(); ++pos) {
    if (row.digit_at(pos) != diagonal[pos - 1]) return pos;
  }
  throw NoDifferenceWithinPrefix("diagonal agrees with row " + std::to_string(n) + " on all " +
                                 std::to_string(diagonal.size()) + " places");
}

PrefixIdentityVerdict ones_list_prefix_identity(std::uint64_t n, const ReplacementRule& rule) {
  if (n < 1) throw OutOfRange("n must be positive");
  const ListView list = ListView::ones_list();
  const DigitStream diagonal = diagonal_stream(list, rule);
  const DigitStream next_row = list.row_at(n + 1);
  PrefixIdentityVerdict v{n};
  // Look one place past the prefix to see where the two part ways.
  for (std::uint64_t pos = 1; pos <= n + 1; ++pos) {
    if (diagonal.digit_at(pos) != next_row.digit_at(pos)) {
      v.divergence = pos;
      break;
    }
    v.agreeing_places = pos;
  }
  v.holds = v.agreeing_places >= n;
  return v;
}

LimitVerdict ones_list_limit_check(std::uint64_t k) {
  if (k < 1) throw OutOfRange("k must be positive");
  const ListView list = ListView::ones_list();
  const std::vector<int> diagonal = build_diagonal(list, ReplacementRule::standard(), k);
  LimitVerdict v{k};
  v.prefix = prefix_value(DigitStream([&](std::uint64_t n) { return diagonal[n - 1]; }, "diagonal prefix"), k);
  v.distance = (v.prefix - Rational(1, 9)).abs();
  v.bound_holds = v.distance <= pow10(-static_cast<long long>(k));
  v.all_escape_at_diagonal = true;
  v.escape_positions.reserve(k);
  for (std::uint64_t n = 1; n <= k; ++n) {
    std::uint64_t pos = locate_escape(list, diagonal, n);
    v.escape_positions.push_back(pos);
    if (pos != n) v.all_escape_at_diagonal = false;
  }
  return v;
}

}  // namespace cantor
