#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "vira/report.hpp"

namespace vira {

struct SweepOptions {
  unsigned jobs = 1;
};

struct SweepOutcome {
  std::optional<Counterexample> failure;
  std::uint64_t checked = 0;
};

/// Runs `check(i)` for i in [0, count) and reports the failure with the
/// smallest index, independent of `jobs`. `check` returns nullopt on success.
/// `checked` is `count` on success and `index + 1` on failure.
template <class Check>
SweepOutcome run_sweep(std::size_t count, Check&& check, const SweepOptions& opts = {}) {
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(count)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (auto ce = check(i)) return {std::move(ce), i + 1};
    }
    return {std::nullopt, count};
  }

  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_fail{none};
  std::mutex mu;
  std::optional<Counterexample> best;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i > first_fail.load()) return;
      auto ce = check(i);
      if (!ce) continue;
      std::lock_guard lock(mu);
      if (i < first_fail.load()) {
        first_fail.store(i);
        best = std::move(ce);
      }
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  pool.clear();

  if (first_fail.load() == none) return {std::nullopt, count};
  return {std::move(best), first_fail.load() + 1};
}

/// Fills `report` status and counterexample from a sweep outcome.
inline VerificationReport& apply_outcome(VerificationReport& report, SweepOutcome outcome) {
  report.checked_count = outcome.checked;
  if (outcome.failure) {
    report.status = Status::fail;
    report.counterexample = std::move(outcome.failure);
  } else {
    report.status = Status::pass;
    report.counterexample.reset();
  }
  return report;
}

}  // namespace vira
