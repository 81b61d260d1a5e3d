// xstate.hpp: two-qubit X-states.
//
// In the basis {|00>, |01>, |10>, |11>} an X-state has real diagonal
// (d11, d22, d33, d44), coherence o14 between |00> and |11>, coherence o23
// between |01> and |10>, and zeros everywhere else.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string_view>

#include "xswap/core.hpp"
#include "xswap/errors.hpp"

namespace xswap {

struct XState {
  double d11 = 0.0;
  double d22 = 0.0;
  double d33 = 0.0;
  double d44 = 0.0;
  Complex o14{};
  Complex o23{};
};

enum class BellLabel { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellLabel, 4> kBellLabels = {
    BellLabel::PhiPlus, BellLabel::PhiMinus, BellLabel::PsiPlus, BellLabel::PsiMinus};

std::string_view to_string(BellLabel label);

/// Which coherence, if any, makes the state entangled.
enum class EntanglementRegime { Separable, EntangledVia00_11, EntangledVia01_10 };

std::string_view to_string(EntanglementRegime regime);

/// The Bell projector for `label` written as an X-state.
XState bell_xstate(BellLabel label);
XState maximally_mixed_xstate();

struct XStateDiagnostics {
  double normalization_defect = 0.0;
  double min_diagonal = 0.0;
  double margin14 = 0.0;  // sqrt(d11 d44) - |o14|
  double margin23 = 0.0;  // sqrt(d22 d33) - |o23|
  bool finite = true;
  bool passed = false;
};

XStateDiagnostics validate(const XState& x, Tolerance tol = {});

/// Throws InvalidStateError unless validate() passes.
void require_valid(const XState& x, Tolerance tol = {});

CMatrix to_matrix(const XState& x);

/// Largest modulus among the eight entries outside the X pattern.
double x_defect(const CMatrix& m);

/// Throws NonXStateError when x_defect exceeds tol, InvalidStateError when
/// the matrix is not 4x4, not Hermitian on the X entries, or the extracted
/// parameters fail validate().
XState from_matrix(const CMatrix& m, Tolerance tol = {});

/// 2 max{0, |o14| - sqrt(d22 d33), |o23| - sqrt(d11 d44)}
double concurrence_x(const XState& x);

/// Strict inequalities, so boundary states are Separable exactly when
/// concurrence_x returns 0.
EntanglementRegime entanglement_regime(const XState& x);

/// arg(o14) - arg(o23)
double phase_difference(const XState& x);

/// diag(1, e^{i(theta14 - theta23)/2}). Identity when either coherence is 0.
CMatrix phase_alignment_unitary(const XState& x);

/// Applies phase_alignment_unitary to the second qubit of the pair; the
/// result has arg(o14) == arg(o23).
XState align_phases(const XState& x);

/// sqrt(a b) with slightly negative diagonal entries clamped to 0 first.
inline double sqrt_product(double a, double b) {
  return std::sqrt(std::max(a, 0.0) * std::max(b, 0.0));
}

}  // namespace xswap
