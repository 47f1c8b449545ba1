#include "cantor/powerset.hpp"

#include "cantor/errors.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace cantor {

std::string subset_str(Subset s, unsigned n) {
  std::string out = "{";
  bool first = true;
  for (unsigned i = 1; i <= n; ++i) {
    if (!contains(s, i)) continue;
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

MappingTable::MappingTable(unsigned ground_size, std::vector<Subset> images)
    : n_(ground_size), images_(std::move(images)) {
  if (n_ < 1 || n_ > kMaxGroundSize) {
    throw OutOfRange("ground set size must be in 1.." + std::to_string(kMaxGroundSize));
  }
  if (images_.size() != n_) throw OutOfRange("mapping needs exactly one image per element");
  for (Subset s : images_) {
    if (s & ~full_set()) throw OutOfRange("image " + std::to_string(s) + " is not a subset of the ground set");
  }
}

MappingTable MappingTable::from_index(unsigned ground_size, std::uint64_t index) {
  if (ground_size < 1 || ground_size > kMaxGroundSize) {
    throw OutOfRange("ground set size must be in 1.." + std::to_string(kMaxGroundSize));
  }
  const std::uint64_t mask = (std::uint64_t{1} << ground_size) - 1;
  std::vector<Subset> images(ground_size);
  for (unsigned i = 1; i <= ground_size; ++i) {
    images[i - 1] = static_cast<Subset>((index >> (ground_size * (ground_size - i))) & mask);
  }
  return MappingTable(ground_size, std::move(images));
}

MappingTable MappingTable::with_image(unsigned element, Subset image) const {
  auto images = images_;
  images.at(element - 1) = image;
  return MappingTable(n_, std::move(images));
}

std::string MappingTable::str() const {
  std::string out;
  for (unsigned i = 1; i <= n_; ++i) {
    if (i > 1) out += ", ";
    out += "s(" + std::to_string(i) + ")=" + subset_str(image(i), n_);
  }
  return out;
}

Subset build_M(const MappingTable& s) {
  Subset m = 0;
  for (unsigned i = 1; i <= s.ground_size(); ++i) {
    if (!contains(s.image(i), i)) m |= Subset{1} << (i - 1);
  }
  return m;
}

RangeVerdict verify_M_not_in_range(const MappingTable& s) {
  RangeVerdict v;
  v.M = build_M(s);
  v.first_difference.reserve(s.ground_size());
  for (unsigned i = 1; i <= s.ground_size(); ++i) {
    Subset diff = v.M ^ s.image(i);
    if (diff == 0) {
      v.in_range = true;
      v.first_difference.push_back(0);
    } else {
      v.first_difference.push_back(static_cast<unsigned>(std::countr_zero(diff)) + 1);
    }
  }
  return v;
}

namespace {

struct RangeResult {
  std::uint64_t checked = 0;
  std::optional<std::uint64_t> failure;
};

RangeResult audit_range(unsigned n, std::uint64_t begin, std::uint64_t end) {
  RangeResult r;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    ++r.checked;
    if (verify_M_not_in_range(MappingTable::from_index(n, idx)).in_range) {
      r.failure = idx;
      break;
    }
  }
  return r;
}

}  // namespace

PowersetAudit exhaustive_audit(unsigned n, unsigned threads) {
  if (n < 1 || n > kMaxGroundSize) throw OutOfRange("ground set size must be in 1.." + std::to_string(kMaxGroundSize));
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  threads = std::clamp<unsigned>(threads, 1, 64);
  if (total < threads * 1024u) threads = 1;

  std::vector<RangeResult> parts(threads);
  const std::uint64_t chunk = (total + threads - 1) / threads;
  auto run_part = [&](unsigned t) {
    std::uint64_t begin = std::min(total, t * chunk);
    std::uint64_t end = std::min(total, begin + chunk);
    parts[t] = audit_range(n, begin, end);
  };
  if (threads == 1) {
    run_part(0);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) workers.emplace_back(run_part, t);
  }

  PowersetAudit audit{n};
  for (const auto& p : parts) {
    if (p.failure) {
      // Report the lexicographically first failure, counted as if the scan
      // had been sequential.
      audit.mappings_checked = *p.failure + 1;
      audit.counterexample = MappingTable::from_index(n, *p.failure);
      return audit;
    }
    audit.mappings_checked += p.checked;
  }
  return audit;
}

std::vector<bool> oscillation_trace(const MappingTable& s, unsigned m, std::uint64_t steps) {
  if (m < 1 || m > s.ground_size()) throw OutOfRange("element m must be in the ground set");
  if (steps < 1) throw OutOfRange("trace needs at least one step");
  std::vector<bool> trace;
  trace.reserve(steps);
  MappingTable current = s;
  for (std::uint64_t k = 0; k < steps; ++k) {
    Subset M = build_M(current);
    trace.push_back(contains(M, m));
    current = current.with_image(m, M);
  }
  return trace;
}

}  // namespace cantor
