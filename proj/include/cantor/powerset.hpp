#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cantor {

/// Subset of {1..n} as a bitmask; element i is bit i - 1.
using Subset = std::uint32_t;

constexpr unsigned kMaxGroundSize = 4;

constexpr bool contains(Subset s, unsigned element) { return (s >> (element - 1)) & 1u; }

std::string subset_str(Subset s, unsigned n);

/// A mapping s: {1..n} -> P({1..n}) for 1 <= n <= 4.
class MappingTable {
 public:
  MappingTable(unsigned ground_size, std::vector<Subset> images);

  /// Mapping number `index` in lexicographic order of (s(1), ..., s(n)),
  /// s(1) most significant.
  static MappingTable from_index(unsigned ground_size, std::uint64_t index);

  unsigned ground_size() const noexcept { return n_; }
  Subset image(unsigned element) const { return images_.at(element - 1); }
  const std::vector<Subset>& images() const noexcept { return images_; }
  Subset full_set() const noexcept { return (Subset{1} << n_) - 1; }
  MappingTable with_image(unsigned element, Subset image) const;

  std::string str() const;

 private:
  unsigned n_;
  std::vector<Subset> images_;
};

/// M = {i : i not in s(i)}.
Subset build_M(const MappingTable& s);

struct RangeVerdict {
  Subset M = 0;
  bool in_range = false;
  /// For each i, the smallest element on which M and s(i) disagree (0 if
  /// they do not disagree, which would mean M = s(i)).
  std::vector<unsigned> first_difference;
};

RangeVerdict verify_M_not_in_range(const MappingTable& s);

struct PowersetAudit {
  unsigned n = 0;
  std::uint64_t mappings_checked = 0;
  std::optional<MappingTable> counterexample;  // first failing mapping, if any
};

/// Checks every one of the (2^n)^n mappings.  `threads` > 1 partitions the
/// index range; the result does not depend on the partition.
PowersetAudit exhaustive_audit(unsigned n, unsigned threads = 1);

/// Treats s(m) as the set M it helps define and re-evaluates "m in M" over
/// and over: each step recomputes M with s(m) replaced by the previous M.
/// Entry k is true when m is in the M computed at step k.
std::vector<bool> oscillation_trace(const MappingTable& s, unsigned m, std::uint64_t steps);

}  // namespace cantor
