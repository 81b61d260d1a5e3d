#include "xswap/swap.hpp"

#include <cmath>
#include <stdexcept>

namespace xswap {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Unnormalised outcome for one Bell label; sign is +1 for phi+/psi+ and -1
// for phi-/psi-.
XState phi_numerator(const XState& x, const XState& y, double sign) {
  return {x.d11 * y.d11 + x.d22 * y.d22,
          x.d11 * y.d33 + x.d22 * y.d44,
          x.d33 * y.d11 + x.d44 * y.d22,
          x.d33 * y.d33 + x.d44 * y.d44,
          sign * (x.o14 * y.o14 + x.o23 * y.o23),
          sign * (x.o14 * std::conj(y.o23) + x.o23 * std::conj(y.o14))};
}

XState psi_numerator(const XState& x, const XState& y, double sign) {
  return {x.d11 * y.d22 + x.d22 * y.d11,
          x.d11 * y.d44 + x.d22 * y.d33,
          x.d33 * y.d22 + x.d44 * y.d11,
          x.d33 * y.d44 + x.d44 * y.d33,
          sign * (x.o14 * y.o23 + x.o23 * y.o14),
          sign * (x.o14 * std::conj(y.o14) + x.o23 * std::conj(y.o23))};
}

SwapOutcome normalise(BellLabel label, const XState& numerator, double norm) {
  SwapOutcome out;
  out.label = label;
  out.probability = norm / 2.0;
  if (out.probability <= kNegligibleProbability) return out;
  out.state = XState{numerator.d11 / norm, numerator.d22 / norm, numerator.d33 / norm,
                     numerator.d44 / norm, numerator.o14 / norm, numerator.o23 / norm};
  out.concurrence = concurrence_x(*out.state);
  return out;
}

// Equal-input shorthands.
double cross_diagonal(const XState& x) { return x.d11 * x.d33 + x.d22 * x.d44; }

double twice_root_product(const XState& x) {
  return 2.0 * std::sqrt(std::max(x.d11, 0.0) * std::max(x.d22, 0.0) * std::max(x.d33, 0.0) *
                         std::max(x.d44, 0.0));
}

double coherence_weight(const XState& x) { return std::norm(x.o14) + std::norm(x.o23); }

CMatrix conjugate_by(const CMatrix& local, const CMatrix& m) { return local * m * local; }

}  // namespace

double SwapOutcomeSet::total_probability() const {
  double sum = 0.0;
  for (const auto& o : outcomes) sum += o.probability;
  return sum;
}

SwapOutcomeSet swap_outcomes(const XState& x, const XState& xp) {
  require_valid(x);
  require_valid(xp);

  const double n_phi = (x.d11 + x.d33) * (xp.d11 + xp.d33) + (x.d22 + x.d44) * (xp.d22 + xp.d44);
  const double n_psi = (x.d11 + x.d33) * (xp.d22 + xp.d44) + (x.d22 + x.d44) * (xp.d11 + xp.d33);

  SwapOutcomeSet set;
  set.outcomes[0] = normalise(BellLabel::PhiPlus, phi_numerator(x, xp, +1.0), n_phi);
  set.outcomes[1] = normalise(BellLabel::PhiMinus, phi_numerator(x, xp, -1.0), n_phi);
  set.outcomes[2] = normalise(BellLabel::PsiPlus, psi_numerator(x, xp, +1.0), n_psi);
  set.outcomes[3] = normalise(BellLabel::PsiMinus, psi_numerator(x, xp, -1.0), n_psi);
  return set;
}

double coherence_overlap(const XState& x, double phi) {
  const double a2 = std::norm(x.o14);
  const double b2 = std::norm(x.o23);
  const double s = std::sin(phi);
  return std::sqrt(std::max(0.0, (a2 + b2) * (a2 + b2) - 4.0 * a2 * b2 * s * s));
}

double concurrence_phi(const XState& x, double delta) {
  require_valid(x);
  const double u = x.d11 + x.d33;
  const double v = x.d22 + x.d44;
  return 2.0 * std::max(0.0, coherence_overlap(x, delta) - cross_diagonal(x)) / (u * u + v * v);
}

double concurrence_psi(const XState& x) {
  require_valid(x);
  const double uv = (x.d11 + x.d33) * (x.d22 + x.d44);
  if (uv <= kNegligibleProbability) return kNaN;  // psi outcomes never occur
  return std::max(0.0, coherence_overlap(x, 0.0) - twice_root_product(x)) / uv;
}

AlignedConcurrences concurrences_aligned(const XState& x) {
  require_valid(x);
  const double u = x.d11 + x.d33;
  const double v = x.d22 + x.d44;
  const double weight = coherence_weight(x);
  AlignedConcurrences c;
  c.c_phi = 2.0 * std::max(0.0, weight - cross_diagonal(x)) / (u * u + v * v);
  c.c_psi = u * v <= kNegligibleProbability
                ? kNaN
                : std::max(0.0, weight - twice_root_product(x)) / (u * v);
  return c;
}

std::string_view to_string(OutcomeRegime regime) {
  switch (regime) {
    case OutcomeRegime::AllSeparable: return "AllSeparable";
    case OutcomeRegime::TwoEntangled: return "TwoEntangled";
    case OutcomeRegime::FourEntangled: return "FourEntangled";
  }
  return "?";
}

OutcomeRegime outcome_entanglement_conditions(const XState& x) {
  require_valid(x);
  const double weight = coherence_weight(x);
  if (weight > cross_diagonal(x)) return OutcomeRegime::FourEntangled;
  if (weight > twice_root_product(x)) return OutcomeRegime::TwoEntangled;
  return OutcomeRegime::AllSeparable;
}

ThresholdReport thresholds(const XState& x) {
  require_valid(x);
  ThresholdReport report;
  report.c_in = concurrence_x(x);
  report.input_entangled = entanglement_regime(x) != EntanglementRegime::Separable;

  const double weaker_coherence = std::min(std::norm(x.o14), std::norm(x.o23));
  const double weaker_bound = std::min(sqrt_product(x.d11, x.d44), sqrt_product(x.d22, x.d33));

  double rad_min = twice_root_product(x) - weaker_coherence;
  double rad_max = cross_diagonal(x) - weaker_coherence;
  if (rad_min < 0.0) {
    rad_min = 0.0;
    report.min_radicand_clamped = true;
  }
  if (rad_max < 0.0) {
    rad_max = 0.0;
    report.max_radicand_clamped = true;
  }
  report.c_th_min = 2.0 * (std::sqrt(rad_min) - weaker_bound);
  report.c_th_max = 2.0 * (std::sqrt(rad_max) - weaker_bound);

  if (!report.input_entangled) return report;

  if (report.c_in > report.c_th_max) {
    report.threshold_regime = OutcomeRegime::FourEntangled;
  } else if (report.c_in > report.c_th_min) {
    report.threshold_regime = OutcomeRegime::TwoEntangled;
  }
  report.regime = outcome_entanglement_conditions(x);
  return report;
}

MaxOutcomeConcurrences max_outcome_concurrences(double d11, double d22, double d33, double d44) {
  const XState diag{d11, d22, d33, d44, 0.0, 0.0};
  require_valid(diag);

  const double u = d11 + d33;
  const double v = d22 + d44;
  const double gap = sqrt_product(d11, d44) - sqrt_product(d22, d33);
  MaxOutcomeConcurrences c;
  c.c_psi_max = u * v <= kNegligibleProbability ? kNaN : gap * gap / (u * v);
  c.c_phi_max = std::max(0.0, 2.0 * (d11 - d22) * (d44 - d33) / (u * u + v * v));
  return c;
}

EquivalenceReport local_unitary_equivalence_check(const SwapOutcomeSet& set, double atol) {
  for (const auto& o : set.outcomes)
    if (!o.defined())
      throw std::invalid_argument("local_unitary_equivalence_check: outcome " +
                                  std::string(to_string(o.label)) + " is undefined");

  const CMatrix id = CMatrix::identity(2);
  const CMatrix z_on_b = kron(id, CMatrix{{1.0, 0.0}, {0.0, -1.0}});
  const CMatrix x_on_b = kron(id, CMatrix{{0.0, 1.0}, {1.0, 0.0}});

  const CMatrix phi_p = to_matrix(*set[BellLabel::PhiPlus].state);
  const CMatrix phi_m = to_matrix(*set[BellLabel::PhiMinus].state);
  const CMatrix psi_p = to_matrix(*set[BellLabel::PsiPlus].state);
  const CMatrix psi_m = to_matrix(*set[BellLabel::PsiMinus].state);

  EquivalenceReport r;
  r.phi_pair_defect = max_abs_diff(phi_m, conjugate_by(z_on_b, phi_p));
  r.psi_pair_defect = max_abs_diff(psi_m, conjugate_by(z_on_b, psi_p));
  r.phi_psi_defect = std::max(max_abs_diff(psi_p, conjugate_by(x_on_b, phi_p)),
                              max_abs_diff(psi_m, conjugate_by(x_on_b, phi_m)));
  r.phi_pair = r.phi_pair_defect <= atol;
  r.psi_pair = r.psi_pair_defect <= atol;
  r.phi_psi_sigma_x = r.phi_psi_defect <= atol;
  return r;
}

}  // namespace xswap
