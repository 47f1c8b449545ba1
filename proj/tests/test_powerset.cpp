#include "cantor/errors.hpp"
#include "cantor/powerset.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace cantor;

namespace {

Subset set_of(std::initializer_list<unsigned> elements) {
  Subset s = 0;
  for (unsigned e : elements) s |= Subset{1} << (e - 1);
  return s;
}

// M computed from explicit element sets rather than bit tests.
std::set<unsigned> oracle_M(const std::vector<std::set<unsigned>>& images) {
  std::set<unsigned> m;
  for (unsigned i = 1; i <= images.size(); ++i) {
    if (images[i - 1].count(i) == 0) m.insert(i);
  }
  return m;
}

std::vector<std::set<unsigned>> as_sets(const MappingTable& s) {
  std::vector<std::set<unsigned>> out;
  for (unsigned i = 1; i <= s.ground_size(); ++i) {
    std::set<unsigned> img;
    for (unsigned e = 1; e <= s.ground_size(); ++e) {
      if ((s.image(i) >> (e - 1)) & 1u) img.insert(e);
    }
    out.push_back(img);
  }
  return out;
}

}  // namespace

TEST_CASE("build_M examples") {
  CHECK(build_M(MappingTable(2, {set_of({1}), set_of({1, 2})})) == 0);
  CHECK(build_M(MappingTable(1, {0})) == set_of({1}));
  CHECK(build_M(MappingTable(3, {set_of({1}), set_of({2}), set_of({3})})) == 0);
  CHECK(build_M(MappingTable(3, {0, 0, 0})) == set_of({1, 2, 3}));
  CHECK(subset_str(set_of({1, 3}), 3) == "{1,3}");
  CHECK(subset_str(0, 3) == "{}");
}

TEST_CASE("verify_M_not_in_range examples") {
  auto one = verify_M_not_in_range(MappingTable(1, {0}));
  CHECK_FALSE(one.in_range);
  CHECK(one.M == set_of({1}));
  CHECK(one.first_difference == std::vector<unsigned>{1});

  auto two = verify_M_not_in_range(MappingTable(2, {set_of({1}), set_of({1, 2})}));
  CHECK_FALSE(two.in_range);
  CHECK(two.M == 0);
  CHECK(two.first_difference == std::vector<unsigned>{1, 1});
}

TEST_CASE("mapping tables") {
  auto s = MappingTable::from_index(2, 0b0110);
  CHECK(s.image(1) == 0b01);
  CHECK(s.image(2) == 0b10);
  CHECK(s.str() == "s(1)={1}, s(2)={2}");
  CHECK(MappingTable::from_index(4, 0).images() == std::vector<Subset>{0, 0, 0, 0});
  CHECK_THROWS_AS(MappingTable(5, {0, 0, 0, 0, 0}), OutOfRange);
  CHECK_THROWS_AS(MappingTable(0, {}), OutOfRange);
  CHECK_THROWS_AS(MappingTable(2, {0}), OutOfRange);
  CHECK_THROWS_AS(MappingTable(2, {0, 0b100}), OutOfRange);
  CHECK_THROWS_AS(MappingTable::from_index(5, 0), OutOfRange);
}

TEST_CASE("exhaustive audit counts") {
  const std::uint64_t expected[] = {2, 16, 512, 65536};
  for (unsigned n = 1; n <= 4; ++n) {
    auto audit = exhaustive_audit(n);
    CHECK(audit.mappings_checked == expected[n - 1]);
    CHECK_FALSE(audit.counterexample.has_value());
  }
  CHECK_THROWS_AS(exhaustive_audit(0), OutOfRange);
  CHECK_THROWS_AS(exhaustive_audit(5), OutOfRange);
}

TEST_CASE("exhaustive audit does not depend on the thread count") {
  for (unsigned threads : {1u, 2u, 3u, 8u, 64u}) {
    auto audit = exhaustive_audit(4, threads);
    CHECK(audit.mappings_checked == 65536);
    CHECK_FALSE(audit.counterexample.has_value());
  }
}

TEST_CASE("property: M agrees with the set oracle and each witness is a real disagreement") {
  for (unsigned n = 1; n <= 3; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      auto s = MappingTable::from_index(n, idx);
      auto images = as_sets(s);
      auto m = oracle_M(images);
      auto v = verify_M_not_in_range(s);
      for (unsigned e = 1; e <= n; ++e) REQUIRE(contains(v.M, e) == (m.count(e) == 1));
      for (unsigned i = 1; i <= n; ++i) {
        REQUIRE(images[i - 1] != m);
        const unsigned w = v.first_difference[i - 1];
        REQUIRE(w >= 1);
        REQUIRE(w <= i);  // element i itself always disagrees
        REQUIRE((m.count(w) == 1) != (images[i - 1].count(w) == 1));
        for (unsigned e = 1; e < w; ++e) REQUIRE((m.count(e) == 1) == (images[i - 1].count(e) == 1));
      }
    }
  }
}

TEST_CASE("oscillation examples") {
  auto s = MappingTable(2, {set_of({2}), set_of({1})});
  auto t4 = oscillation_trace(s, 1, 4);
  CHECK(t4 == std::vector<bool>{true, false, true, false});
  CHECK(oscillation_trace(s, 1, 1).size() == 1);
  auto t6 = oscillation_trace(s, 1, 6);
  for (std::size_t k = 1; k < t6.size(); ++k) CHECK(t6[k] != t6[k - 1]);
  auto in_first = oscillation_trace(MappingTable(1, {set_of({1})}), 1, 4);
  CHECK(in_first == std::vector<bool>{false, true, false, true});
  CHECK_THROWS_AS(oscillation_trace(s, 3, 4), OutOfRange);
  CHECK_THROWS_AS(oscillation_trace(s, 1, 0), OutOfRange);
}

TEST_CASE("property: oscillation has period two for random mappings") {
  test::Gen gen(51);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<unsigned>(gen.integer(1, 4));
    auto s = MappingTable::from_index(n, static_cast<std::uint64_t>(gen.integer(0, (1ll << (n * n)) - 1)));
    const auto m = static_cast<unsigned>(gen.integer(1, n));
    auto trace = oscillation_trace(s, m, 100);
    REQUIRE(trace.front() == !contains(s.image(m), m));
    for (std::size_t k = 1; k < trace.size(); ++k) REQUIRE(trace[k] != trace[k - 1]);
  }
}
