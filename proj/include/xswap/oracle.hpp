// oracle.hpp: brute-force reference path for swapping.
//
// Builds the explicit 16x16 four-qubit state, applies each Bell projector on
// (C1,C2), and traces (C1,C2) out. Concurrence uses the general Wootters
// construction. Nothing here depends on the closed forms in swap.hpp.

#pragma once

#include <array>
#include <optional>

#include "xswap/core.hpp"
#include "xswap/xstate.hpp"

namespace xswap::oracle {

/// Four-qubit density matrix in subsystem order (A, B, C1, C2).
struct JointState {
  CMatrix matrix;
};

/// rho_{A,C1} (x) rho_{B,C2}, reordered from (A, C1, B, C2) to (A, B, C1, C2).
JointState joint_state(const XState& x, const XState& xp);

/// Rank-1 projectors onto phi+, phi-, psi+, psi- (kBellLabels order).
std::array<CMatrix, 4> bell_projectors();

struct BellBranch {
  BellLabel label = BellLabel::PhiPlus;
  double probability = 0.0;
  std::optional<CMatrix> state;  // (A,B) conditional state; empty if p ~ 0
};

/// Projective Bell measurement of (C1,C2). Throws InvalidStateError when the
/// joint state is not a valid 16x16 density matrix.
std::array<BellBranch, 4> measure_bell(const JointState& joint);

/// Wootters concurrence of an arbitrary two-qubit density matrix. Throws
/// InvalidStateError for an invalid input.
double concurrence_general(const CMatrix& rho);

}  // namespace xswap::oracle
