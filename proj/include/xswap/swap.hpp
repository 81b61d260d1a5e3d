// swap.hpp: closed-form entanglement swapping of two X-states.
//
// Pairs (A,C1) and (B,C2) start in X-states x and xp. A Bell measurement on
// (C1,C2) leaves (A,B) in one of four X-states whose entries are bilinear in
// the input entries. The equal-input analysis (thresholds, phase dependence,
// best-case concurrences) is exposed only for x == xp.

#pragma once

#include <array>
#include <limits>
#include <optional>
#include <string_view>

#include "xswap/xstate.hpp"

namespace xswap {

struct SwapOutcome {
  BellLabel label = BellLabel::PhiPlus;
  double probability = 0.0;
  /// Empty when the outcome has (numerically) zero probability.
  std::optional<XState> state;
  /// NaN when `state` is empty.
  double concurrence = std::numeric_limits<double>::quiet_NaN();

  bool defined() const noexcept { return state.has_value(); }
};

struct SwapOutcomeSet {
  std::array<SwapOutcome, 4> outcomes;  // in kBellLabels order

  const SwapOutcome& operator[](BellLabel label) const {
    return outcomes[static_cast<std::size_t>(label)];
  }
  double total_probability() const;
};

/// Post-measurement (A,B) states for inputs x on (A,C1) and xp on (B,C2).
/// Throws InvalidStateError on an invalid input.
SwapOutcomeSet swap_outcomes(const XState& x, const XState& xp);

/// Entanglement of the phi outcomes for two copies of x, as a function of
/// the phase difference delta = theta14 - theta23.
double concurrence_phi(const XState& x, double delta);

/// Entanglement of the psi outcomes for two copies of x; phase independent.
double concurrence_psi(const XState& x);

/// sqrt((|o14|^2 + |o23|^2)^2 - 4 |o14|^2 |o23|^2 sin^2(phi))
double coherence_overlap(const XState& x, double phi);

struct AlignedConcurrences {
  double c_phi = 0.0;
  double c_psi = 0.0;
};

/// Both outcome concurrences for two copies of x after phase alignment.
AlignedConcurrences concurrences_aligned(const XState& x);

enum class OutcomeRegime { AllSeparable, TwoEntangled, FourEntangled };

std::string_view to_string(OutcomeRegime regime);

/// Regime for two phase-aligned copies of x:
///   FourEntangled  iff |o14|^2 + |o23|^2 > d11 d33 + d22 d44
///   TwoEntangled   iff d11 d33 + d22 d44 >= |o14|^2 + |o23|^2 > 2 sqrt(d11 d22 d33 d44)
///   AllSeparable   otherwise
OutcomeRegime outcome_entanglement_conditions(const XState& x);

struct ThresholdReport {
  double c_in = 0.0;
  double c_th_min = 0.0;
  double c_th_max = 0.0;
  /// From the inequalities in outcome_entanglement_conditions.
  OutcomeRegime regime = OutcomeRegime::AllSeparable;
  /// From comparing c_in against the thresholds; only meaningful when
  /// input_entangled. Agrees with `regime` away from the boundaries.
  OutcomeRegime threshold_regime = OutcomeRegime::AllSeparable;
  bool input_entangled = false;
  bool min_radicand_clamped = false;
  bool max_radicand_clamped = false;
};

ThresholdReport thresholds(const XState& x);

struct MaxOutcomeConcurrences {
  double c_psi_max = 0.0;
  double c_phi_max = 0.0;
};

/// Outcome concurrences at full coherence |o14| = sqrt(d11 d44),
/// |o23| = sqrt(d22 d33), for fixed diagonals.
MaxOutcomeConcurrences max_outcome_concurrences(double d11, double d22, double d33, double d44);

struct EquivalenceReport {
  /// phi- == (I (x) sigma_z) phi+ (I (x) sigma_z)
  bool phi_pair = false;
  double phi_pair_defect = 0.0;
  /// psi- == (I (x) sigma_z) psi+ (I (x) sigma_z)
  bool psi_pair = false;
  double psi_pair_defect = 0.0;
  /// psi+- == (I (x) sigma_x) phi+- (I (x) sigma_x); holds when one input
  /// is the phi+ Bell state.
  bool phi_psi_sigma_x = false;
  double phi_psi_defect = 0.0;
};

/// Throws std::invalid_argument if any outcome is undefined.
EquivalenceReport local_unitary_equivalence_check(const SwapOutcomeSet& set,
                                                  double atol = 1e-12);

}  // namespace xswap
