#pragma once

#include "cantor/interval.hpp"
#include "cantor/sequence.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace cantor {

/// 1-based indices of the two sequence members that formed an interval,
/// in scan order (first < second).
struct ConsumedPair {
  std::uint64_t first = 0;
  std::uint64_t second = 0;
  friend bool operator==(const ConsumedPair&, const ConsumedPair&) = default;
};

struct NestedStep {
  Interval interval;
  ConsumedPair consumed;
};

/// Successful scan: the next nested interval and where the following scan
/// should resume.
struct IntervalFound {
  Interval interval;
  ConsumedPair consumed;
  std::uint64_t next_scan_from = 0;
};

/// Fewer than two members were found inside the interval.
struct FiniteCase {
  std::uint64_t members_found = 0;           // 0 or 1
  std::optional<std::uint64_t> member_index;  // when members_found == 1
  std::uint64_t scanned_through = 0;          // last index inspected
  bool source_exhausted = false;              // finite source ran out before the budget
};

using ScanResult = std::variant<IntervalFound, FiniteCase>;

/// Scans indices scan_from..budget for the first two members strictly
/// inside `iv`.  Throws NotInjective if a scanned value repeats.
ScanResult next_interval(const SequenceSource& seq, const Interval& iv, std::uint64_t scan_from,
                         std::uint64_t budget);

enum class Outcome { converged, finite_case_within_budget, budget_exhausted };

std::string_view to_string(Outcome o);

struct NestedRun {
  Interval start;
  std::vector<NestedStep> steps;
  Outcome outcome = Outcome::converged;
  std::uint64_t scan_budget = 0;
  std::uint64_t depth = 0;
  /// Members found inside the last interval when the finite case occurs.
  std::uint64_t witnesses_found = 0;
  std::optional<std::uint64_t> witness_index;
  /// Concrete eta, offered only in the finite case.
  std::optional<Rational> eta;

  const Interval& last_interval() const { return steps.empty() ? start : steps.back().interval; }
  std::uint64_t last_consumed_index() const { return steps.empty() ? 0 : steps.back().consumed.second; }
  /// Bounds on eta when the run converged to the requested depth.
  std::optional<Interval> bounds() const {
    if (outcome != Outcome::converged) return std::nullopt;
    return last_interval();
  }
};

/// Builds the chain of nested intervals starting at `start`.  `depth`
/// counts intervals in the chain including `start`, so at most depth - 1
/// scans are performed.
NestedRun run_nested(const SequenceSource& seq, const Interval& start, std::uint64_t depth,
                     std::uint64_t budget);

struct AuditReport {
  std::uint64_t checked_through = 0;
  std::vector<std::uint64_t> violations;  // indices of members inside the last interval
  bool clean() const { return violations.empty(); }
};

/// Checks that every member with index <= the run's last consumed index lies
/// outside the run's last interval.
AuditReport audit_members_outside(const NestedRun& run, const SequenceSource& seq);

}  // namespace cantor
