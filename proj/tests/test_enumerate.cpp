#include "cantor/errors.hpp"
#include "cantor/sequence.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace cantor;

TEST_CASE("harmonic_term examples") {
  CHECK(harmonic_term(1) == Rational(-1));
  CHECK(harmonic_term(2) == Rational::parse("1/2"));
  CHECK(harmonic_term(4) == Rational::parse("1/4"));
  CHECK_THROWS_AS(harmonic_term(0), OutOfRange);
}

TEST_CASE("property: harmonic sign pattern and magnitude") {
  for (std::uint64_t nu = 1; nu <= 5000; ++nu) {
    Rational w = harmonic_term(nu);
    REQUIRE((w.sign() < 0) == (nu % 2 == 1));
    REQUIRE(w.abs() == Rational(BigInt(1), BigInt(nu)));
  }
}

TEST_CASE("bijection_index examples") {
  CHECK(bijection_index(Rational(0)) == 1);
  CHECK(bijection_index(Rational(-1)) == 2);
  CHECK(bijection_index(Rational::parse("-1/3")) == 4);
  CHECK(bijection_index(Rational::parse("1/6")) == 7);
  CHECK_THROWS_AS(bijection_index(Rational::parse("1/3")), NotAMember);
  CHECK_THROWS_AS(bijection_index(Rational::parse("-1/2")), NotAMember);
  CHECK_THROWS_AS(bijection_index(Rational::parse("2/5")), NotAMember);
  CHECK_THROWS_AS(bijection_index(Rational(2)), NotAMember);
}

TEST_CASE("property: bijection_index inverts the harmonic enumeration") {
  for (std::uint64_t nu = 1; nu <= 2000; ++nu) REQUIRE(bijection_index(harmonic_term(nu)) == nu + 1);
}

TEST_CASE("rationals_in the unit interval: first terms and regression indices") {
  auto seq = SequenceSource::rationals_in(Interval::parse("0,1"));
  std::set<Rational> first;
  for (std::uint64_t i = 1; i <= 5; ++i) {
    auto t = seq.term_at(i);
    REQUIRE(t);
    CHECK(Interval::parse("0,1").contains(*t));
    first.insert(*t);
  }
  CHECK(first.size() == 5);
  // pairing order: p + q = 3, 4, 5, ... with q ascending
  CHECK(*seq.term_at(1) == Rational::parse("1/2"));
  CHECK(*seq.term_at(2) == Rational::parse("1/3"));
  CHECK(*seq.term_at(3) == Rational::parse("2/3"));
  CHECK(*seq.term_at(4) == Rational::parse("1/4"));
  CHECK(seq.injective_by_construction());
  CHECK_FALSE(seq.size().has_value());
  CHECK_THROWS_AS((void)seq.term_at(0), OutOfRange);
}

TEST_CASE("rationals_in an interval spanning zero emits both signs") {
  auto seq = SequenceSource::rationals_in(Interval::parse("-1,1"));
  CHECK(*seq.term_at(1) == Rational(0));
  // +p/q is immediately followed by -p/q
  std::set<Rational> seen;
  for (std::uint64_t i = 1; i <= 201; ++i) seen.insert(*seq.term_at(i));
  for (std::uint64_t i = 1; i <= 200; ++i) REQUIRE(seen.count(-*seq.term_at(i)) == 1);
  for (std::uint64_t i = 2; i <= 200; i += 2) {
    REQUIRE(seq.term_at(i)->sign() > 0);
    REQUIRE(*seq.term_at(i + 1) == -*seq.term_at(i));
  }
}

TEST_CASE("property: every source is injective on a prefix of 10^4") {
  test::TempFile file("inj.txt", "# small list\n1/2\n\n0.25\n-3\n7/9\n");
  std::vector<SequenceSource> sources{
      SequenceSource::harmonic(),
      SequenceSource::rationals_in(Interval::parse("0,1")),
      SequenceSource::rationals_in(Interval::parse("-5/2,7/3")),
      SequenceSource::rationals_in(Interval::parse("2,5")),
      SequenceSource::from_file(file.path()),
  };
  for (const auto& seq : sources) {
    std::set<Rational> seen;
    std::uint64_t count = 0;
    for (std::uint64_t i = 1; i <= 10000; ++i) {
      auto t = seq.term_at(i);
      if (!t) break;
      ++count;
      REQUIRE(seen.insert(*t).second);
    }
    CHECK(seen.size() == count);
  }
}

TEST_CASE("property: rationals_in (0,1) leaves no gap of width 1/100 in 10^5 terms") {
  auto seq = SequenceSource::rationals_in(Interval::parse("0,1"));
  std::vector<Rational> terms{Rational(0), Rational(1)};
  for (std::uint64_t i = 1; i <= 100000; ++i) terms.push_back(*seq.term_at(i));
  std::sort(terms.begin(), terms.end());
  Rational widest(0);
  for (std::size_t i = 1; i < terms.size(); ++i) widest = std::max(widest, terms[i] - terms[i - 1]);
  // every open (a, b) of width >= 1/100 then contains a term
  CHECK(widest < Rational::parse("1/100"));
}

TEST_CASE("property: rationals_in terms stay inside the interval") {
  test::Gen gen(21);
  for (int i = 0; i < 20; ++i) {
    Rational a = gen.rational(20, 7);
    Rational b = a + Rational(BigInt(gen.integer(1, 30)), BigInt(gen.integer(1, 30)));
    Interval iv(a, b);
    auto seq = SequenceSource::rationals_in(iv);
    for (std::uint64_t k = 1; k <= 300; ++k) REQUIRE(iv.contains(*seq.term_at(k)));
  }
}

TEST_CASE("from_file reads comments, decimals and fractions") {
  test::TempFile file("read.txt", "# header\n  1/2 \n\n-0.75\n3 # trailing\n");
  auto seq = SequenceSource::from_file(file.path());
  REQUIRE(seq.size() == std::optional<std::uint64_t>(3));
  CHECK(*seq.term_at(1) == Rational::parse("1/2"));
  CHECK(*seq.term_at(2) == Rational::parse("-3/4"));
  CHECK(*seq.term_at(3) == Rational(3));
  CHECK_FALSE(seq.term_at(4).has_value());
  CHECK(seq.kind() == SequenceSource::Kind::from_file);
}

TEST_CASE("from_file rejects duplicates, garbage and missing files") {
  test::TempFile dup("dup.txt", "1/2\n0.5\n");
  CHECK_THROWS_AS(SequenceSource::from_file(dup.path()), NotInjective);
  test::TempFile bad("bad.txt", "1/2\nhello\n");
  CHECK_THROWS_AS(SequenceSource::from_file(bad.path()), ParseError);
  CHECK_THROWS_AS(SequenceSource::from_file("/nonexistent/cantor/list.txt"), ParseError);
  CHECK_THROWS_AS(SequenceSource::from_terms({Rational(1), Rational(1)}), NotInjective);
}
