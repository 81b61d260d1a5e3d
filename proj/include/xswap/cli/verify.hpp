// verify.hpp: cross-checks the closed-form swap against the oracle.

#pragma once

#include <cstdint>
#include <functional>

#include "xswap/swap.hpp"

namespace xswap::cli {

using OutcomeFn = std::function<SwapOutcomeSet(const XState&, const XState&)>;

inline constexpr double kVerifyBound = 1e-9;

struct Deviation {
  double matrix = 0.0;       // entrywise, outcome states
  double probability = 0.0;
  double concurrence = 0.0;  // concurrence_x of closed-form states vs Wootters on oracle states
  double equal_input = 0.0;  // concurrence_phi / concurrence_psi vs oracle (x == xp only)
  std::size_t definedness_mismatches = 0;

  void absorb(const Deviation& other);
  double worst() const;
};

/// Compares one input pair. When x == xp the equal-input formulas are
/// checked as well.
Deviation compare_with_oracle(const XState& x, const XState& xp,
                              const OutcomeFn& outcomes = swap_outcomes);

struct VerifyReport {
  std::size_t pairs = 0;        // distinct-input cases
  std::size_t equal_cases = 0;  // x == xp cases
  Deviation max;
  double bound = kVerifyBound;

  bool passed() const { return max.definedness_mismatches == 0 && max.worst() <= bound; }
};

/// Samples n distinct pairs and n equal-input cases from `seed` and checks
/// all of them. Cases are evaluated concurrently; the sample sequence is
/// fixed by the seed alone.
VerifyReport run_verification(std::size_t n, std::uint64_t seed,
                              const OutcomeFn& outcomes = swap_outcomes);

}  // namespace xswap::cli
