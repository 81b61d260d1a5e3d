#include "xswap/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "xswap/cli/parallel.hpp"
#include "xswap/cli/random.hpp"
#include "xswap/oracle.hpp"

namespace xswap::cli {

namespace {

bool same_state(const XState& a, const XState& b) {
  return a.d11 == b.d11 && a.d22 == b.d22 && a.d33 == b.d33 && a.d44 == b.d44 && a.o14 == b.o14 &&
         a.o23 == b.o23;
}

}  // namespace

void Deviation::absorb(const Deviation& other) {
  matrix = std::max(matrix, other.matrix);
  probability = std::max(probability, other.probability);
  concurrence = std::max(concurrence, other.concurrence);
  equal_input = std::max(equal_input, other.equal_input);
  definedness_mismatches += other.definedness_mismatches;
}

double Deviation::worst() const { return std::max({matrix, probability, concurrence, equal_input}); }

Deviation compare_with_oracle(const XState& x, const XState& xp, const OutcomeFn& outcomes) {
  const SwapOutcomeSet closed = outcomes(x, xp);
  const auto branches = oracle::measure_bell(oracle::joint_state(x, xp));

  Deviation dev;
  std::array<double, 4> oracle_concurrence{};
  for (std::size_t k = 0; k < 4; ++k) {
    const SwapOutcome& c = closed.outcomes[k];
    const oracle::BellBranch& o = branches[k];
    dev.probability = std::max(dev.probability, std::abs(c.probability - o.probability));
    if (c.defined() != o.state.has_value()) {
      ++dev.definedness_mismatches;
      continue;
    }
    if (!c.defined()) continue;
    dev.matrix = std::max(dev.matrix, max_abs_diff(to_matrix(*c.state), *o.state));
    oracle_concurrence[k] = oracle::concurrence_general(*o.state);
    dev.concurrence = std::max(dev.concurrence, std::abs(c.concurrence - oracle_concurrence[k]));
  }

  if (same_state(x, xp)) {
    const double c_phi = concurrence_phi(x, phase_difference(x));
    const double c_psi = concurrence_psi(x);
    for (std::size_t k = 0; k < 4; ++k) {
      if (!branches[k].state) continue;
      const double closed_form = k < 2 ? c_phi : c_psi;
      dev.equal_input = std::max(dev.equal_input, std::abs(closed_form - oracle_concurrence[k]));
    }
  }
  return dev;
}

VerifyReport run_verification(std::size_t n, std::uint64_t seed, const OutcomeFn& outcomes) {
  SplitMix64 rng(seed);
  struct Case {
    XState x, xp;
  };
  std::vector<Case> cases;
  cases.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const XState x = draw_xstate(rng);
    const XState xp = draw_xstate(rng);
    cases.push_back({x, xp});
  }
  for (std::size_t i = 0; i < n; ++i) {
    const XState x = draw_xstate(rng);
    cases.push_back({x, x});
  }

  std::vector<Deviation> results(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    results[i] = compare_with_oracle(cases[i].x, cases[i].xp, outcomes);
  });

  VerifyReport report;
  report.pairs = n;
  report.equal_cases = n;
  for (const auto& r : results) report.max.absorb(r);
  return report;
}

}  // namespace xswap::cli
