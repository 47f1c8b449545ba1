#pragma once

#include "cantor/rational.hpp"

#include <cstdint>
#include <random>

namespace cantor::test {

/// Seeded generator shared by the property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  bool coin() { return integer(0, 1) == 1; }

  /// p/q with |p| <= max_num and 1 <= q <= max_den.
  Rational rational(std::int64_t max_num, std::int64_t max_den) {
    return Rational(BigInt(integer(-max_num, max_num)), BigInt(integer(1, max_den)));
  }

  /// A value in [0, 1) with denominator at most max_den.
  Rational unit(std::int64_t max_den) {
    std::int64_t q = integer(1, max_den);
    return Rational(BigInt(integer(0, q - 1)), BigInt(q));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace cantor::test

#include <filesystem>
#include <fstream>
#include <string>

namespace cantor::test {

/// A file under the temp directory that is removed when this goes out of scope.
class TempFile {
 public:
  TempFile(const std::string& name, const std::string& content)
      : path_(std::filesystem::temp_directory_path() / ("cantor_test_" + name)) {
    std::ofstream(path_) << content;
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace cantor::test
