#include "cantor/sequence.hpp"

#include "cantor/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <fstream>
#include <limits>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace cantor {

Rational harmonic_term(std::uint64_t nu) {
  if (nu < 1) throw OutOfRange("harmonic index starts at 1");
  return Rational(BigInt(nu % 2 == 1 ? -1 : 1), BigInt(nu));
}

std::uint64_t bijection_index(const Rational& x) {
  if (x.is_zero()) return 1;
  if (x.abs().num() == 1 && x.den() <= std::numeric_limits<std::uint64_t>::max()) {
    auto nu = x.den().convert_to<std::uint64_t>();
    bool odd = nu % 2 == 1;
    if (odd == (x.sign() < 0)) return nu + 1;
  }
  throw NotAMember(x.str() + " is neither 0 nor a term of the alternating harmonic sequence");
}

class SequenceSource::Impl {
 public:
  virtual ~Impl() = default;
  virtual Kind kind() const = 0;
  virtual std::string describe() const = 0;
  virtual std::optional<Rational> term_at(std::uint64_t index) const = 0;
  virtual std::optional<std::uint64_t> size() const { return std::nullopt; }
  virtual bool injective_by_construction() const { return true; }
};

namespace {

class HarmonicSource final : public SequenceSource::Impl {
 public:
  SequenceSource::Kind kind() const override { return SequenceSource::Kind::harmonic; }
  std::string describe() const override { return "harmonic"; }
  std::optional<Rational> term_at(std::uint64_t index) const override { return harmonic_term(index); }
};

class ListSource final : public SequenceSource::Impl {
 public:
  ListSource(std::vector<Rational> terms, std::string name, SequenceSource::Kind kind)
      : terms_(std::move(terms)), name_(std::move(name)), kind_(kind) {}

  SequenceSource::Kind kind() const override { return kind_; }
  std::string describe() const override { return name_; }
  std::optional<Rational> term_at(std::uint64_t index) const override {
    if (index < 1) throw OutOfRange("sequence indices start at 1");
    if (index > terms_.size()) return std::nullopt;
    return terms_[index - 1];
  }
  std::optional<std::uint64_t> size() const override { return terms_.size(); }

 private:
  std::vector<Rational> terms_;
  std::string name_;
  SequenceSource::Kind kind_;
};

class FunctionSource final : public SequenceSource::Impl {
 public:
  FunctionSource(std::function<std::optional<Rational>(std::uint64_t)> fn, std::string name)
      : fn_(std::move(fn)), name_(std::move(name)) {}

  SequenceSource::Kind kind() const override { return SequenceSource::Kind::custom; }
  std::string describe() const override { return name_; }
  std::optional<Rational> term_at(std::uint64_t index) const override {
    if (index < 1) throw OutOfRange("sequence indices start at 1");
    return fn_(index);
  }
  bool injective_by_construction() const override { return false; }

 private:
  std::function<std::optional<Rational>(std::uint64_t)> fn_;
  std::string name_;
};

// Walks reduced fractions p/q along the diagonals p + q = d.  Terms are
// cached as machine integers; the walk is extended on demand under a lock,
// so concurrent readers see the same order.
class RationalWalkSource final : public SequenceSource::Impl {
 public:
  explicit RationalWalkSource(Interval iv) : iv_(std::move(iv)) {}

  SequenceSource::Kind kind() const override { return SequenceSource::Kind::rationals_in; }
  std::string describe() const override { return "rationals_in" + iv_.str(); }

  std::optional<Rational> term_at(std::uint64_t index) const override {
    if (index < 1) throw OutOfRange("sequence indices start at 1");
    std::lock_guard lock(mutex_);
    while (cache_.size() < index) advance();
    const Entry& e = cache_[index - 1];
    return Rational(BigInt(e.num), BigInt(e.den));
  }

 private:
  struct Entry {
    std::int64_t num;
    std::int64_t den;
  };

  // Emits candidates until at least one more term lands in the interval.
  void advance() const {
    const std::size_t before = cache_.size();
    while (cache_.size() == before) {
      const std::int64_t p = d_ - q_;
      const bool reduced = std::gcd(p, q_) == 1;
      if (reduced) try_emit(negative_phase_ ? -p : p, q_);
      if (reduced && !negative_phase_ && p > 0) {
        negative_phase_ = true;
        continue;
      }
      negative_phase_ = false;
      if (++q_ > d_) {
        ++d_;
        q_ = 1;
      }
    }
  }

  void try_emit(std::int64_t num, std::int64_t den) const {
    // p/q with gcd(p, q) = 1 is already reduced
    Rational x{BigInt(num), BigInt(den)};
    if (iv_.contains(x)) cache_.push_back({num, den});
  }

  Interval iv_;
  mutable std::mutex mutex_;
  mutable std::vector<Entry> cache_;
  mutable std::int64_t d_ = 1;
  mutable std::int64_t q_ = 1;
  mutable bool negative_phase_ = false;
};

std::vector<Rational> reject_duplicates(std::vector<Rational> terms, const std::string& origin,
                                        const std::vector<std::size_t>* lines = nullptr) {
  std::unordered_map<Rational, std::size_t, RationalHash> seen;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto [it, inserted] = seen.emplace(terms[i], i);
    if (!inserted) {
      auto where = [&](std::size_t k) { return lines ? "line " + std::to_string((*lines)[k]) : "term " + std::to_string(k + 1); };
      throw NotInjective(origin + ": " + terms[i].str() + " repeats (" + where(it->second) + " and " + where(i) + ")");
    }
  }
  return terms;
}

}  // namespace

SequenceSource SequenceSource::harmonic() { return SequenceSource(std::make_shared<HarmonicSource>()); }

SequenceSource SequenceSource::rationals_in(const Interval& iv) {
  return SequenceSource(std::make_shared<RationalWalkSource>(iv));
}

SequenceSource SequenceSource::from_terms(std::vector<Rational> terms, std::string name) {
  terms = reject_duplicates(std::move(terms), name);
  return SequenceSource(std::make_shared<ListSource>(std::move(terms), std::move(name), Kind::from_file));
}

SequenceSource SequenceSource::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open sequence file '" + path.string() + "'");
  std::vector<Rational> terms;
  std::vector<std::size_t> lines;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      terms.push_back(Rational::parse(line));
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    lines.push_back(line_no);
  }
  terms = reject_duplicates(std::move(terms), path.string(), &lines);
  return SequenceSource(std::make_shared<ListSource>(std::move(terms), "file:" + path.filename().string(), Kind::from_file));
}

SequenceSource SequenceSource::from_function(std::function<std::optional<Rational>(std::uint64_t)> fn,
                                             std::string name) {
  return SequenceSource(std::make_shared<FunctionSource>(std::move(fn), std::move(name)));
}

SequenceSource::Kind SequenceSource::kind() const { return impl_->kind(); }
std::string SequenceSource::describe() const { return impl_->describe(); }
std::optional<Rational> SequenceSource::term_at(std::uint64_t index) const { return impl_->term_at(index); }
std::optional<std::uint64_t> SequenceSource::size() const { return impl_->size(); }
bool SequenceSource::injective_by_construction() const { return impl_->injective_by_construction(); }

}  // namespace cantor
