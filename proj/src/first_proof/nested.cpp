#include "cantor/nested.hpp"

#include "cantor/errors.hpp"

#include <unordered_map>

namespace cantor {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::converged: return "converged";
    case Outcome::finite_case_within_budget: return "finite_case_within_budget";
    case Outcome::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

namespace {

// Remembers every scanned value of a source that is not injective by
// construction, across all scans of one run.
class InjectivityGuard {
 public:
  explicit InjectivityGuard(const SequenceSource& seq) : active_(!seq.injective_by_construction()) {}

  void observe(const Rational& value, std::uint64_t index) {
    if (!active_) return;
    auto [it, inserted] = seen_.emplace(value, index);
    if (!inserted && it->second != index) {
      throw NotInjective("sequence repeats " + value.str() + " at indices " + std::to_string(it->second) +
                         " and " + std::to_string(index));
    }
  }

 private:
  bool active_;
  std::unordered_map<Rational, std::uint64_t, RationalHash> seen_;
};

ScanResult scan(const SequenceSource& seq, const Interval& iv, std::uint64_t scan_from, std::uint64_t budget,
                InjectivityGuard& guard) {
  if (scan_from < 1) throw OutOfRange("scan_from must be at least 1");
  std::optional<std::pair<Rational, std::uint64_t>> first;
  std::uint64_t index = scan_from;
  for (; index <= budget; ++index) {
    auto term = seq.term_at(index);
    if (!term) {
      return FiniteCase{first ? 1u : 0u, first ? std::optional(first->second) : std::nullopt, index - 1, true};
    }
    guard.observe(*term, index);
    if (!iv.contains(*term)) continue;
    if (!first) {
      first.emplace(std::move(*term), index);
      continue;
    }
    const Rational& a = first->first;
    Interval next = a < *term ? Interval(a, *term) : Interval(*term, a);
    return IntervalFound{std::move(next), {first->second, index}, index + 1};
  }
  return FiniteCase{first ? 1u : 0u, first ? std::optional(first->second) : std::nullopt,
                    budget >= scan_from ? budget : scan_from - 1, false};
}

}  // namespace

ScanResult next_interval(const SequenceSource& seq, const Interval& iv, std::uint64_t scan_from,
                         std::uint64_t budget) {
  InjectivityGuard guard(seq);
  return scan(seq, iv, scan_from, budget, guard);
}

NestedRun run_nested(const SequenceSource& seq, const Interval& start, std::uint64_t depth,
                     std::uint64_t budget) {
  if (depth < 1) throw OutOfRange("depth must be at least 1");
  if (budget < 1) throw OutOfRange("scan budget must be at least 1");
  NestedRun run{start, {}, Outcome::converged, budget, depth};
  InjectivityGuard guard(seq);
  std::uint64_t scan_from = 1;
  while (run.steps.size() + 1 < depth) {
    auto result = scan(seq, run.last_interval(), scan_from, budget, guard);
    if (auto* found = std::get_if<IntervalFound>(&result)) {
      scan_from = found->next_scan_from;
      run.steps.push_back({std::move(found->interval), found->consumed});
      continue;
    }
    const auto& fc = std::get<FiniteCase>(result);
    run.witnesses_found = fc.members_found;
    run.witness_index = fc.member_index;
    if (!fc.source_exhausted) {
      run.outcome = Outcome::budget_exhausted;
      break;
    }
    run.outcome = Outcome::finite_case_within_budget;
    // Any point of the last interval other than the (at most one) member
    // found inside it will do.
    const Interval& last = run.last_interval();
    Rational eta = last.midpoint();
    if (fc.member_index && *seq.term_at(*fc.member_index) == eta) eta = last.lo() + last.width() / Rational(4);
    run.eta = std::move(eta);
    break;
  }
  return run;
}

AuditReport audit_members_outside(const NestedRun& run, const SequenceSource& seq) {
  AuditReport report;
  report.checked_through = run.last_consumed_index();
  const Interval& last = run.last_interval();
  for (std::uint64_t i = 1; i <= report.checked_through; ++i) {
    auto term = seq.term_at(i);
    if (term && last.contains(*term)) report.violations.push_back(i);
  }
  return report;
}

}  // namespace cantor
