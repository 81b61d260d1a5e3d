#include "xswap/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace xswap::oracle {

namespace {

constexpr std::array<std::size_t, 4> kQubits = {2, 2, 2, 2};
constexpr double kEigenFloor = 1e-14;

CMatrix bell_projector(BellLabel label) {
  const double r = 1.0 / std::sqrt(2.0);
  std::array<Complex, 4> v{};
  switch (label) {
    case BellLabel::PhiPlus: v = {r, 0.0, 0.0, r}; break;
    case BellLabel::PhiMinus: v = {r, 0.0, 0.0, -r}; break;
    case BellLabel::PsiPlus: v = {0.0, r, r, 0.0}; break;
    case BellLabel::PsiMinus: v = {0.0, r, -r, 0.0}; break;
  }
  return CMatrix::outer(v);
}

void require_density(const CMatrix& rho, std::size_t dim, const char* what) {
  if (rho.dim() != dim) throw InvalidStateError(std::string(what) + ": wrong dimension");
  if (!validate_density(rho).passed)
    throw InvalidStateError(std::string(what) + ": not a valid density matrix");
}

}  // namespace

JointState joint_state(const XState& x, const XState& xp) {
  // kron gives (A, C1, B, C2); subsystem s of the result is old subsystem order[s].
  const CMatrix product = kron(to_matrix(x), to_matrix(xp));
  constexpr std::array<std::size_t, 4> order = {0, 2, 1, 3};
  return {permute_subsystems(product, kQubits, order)};
}

std::array<CMatrix, 4> bell_projectors() {
  return {bell_projector(BellLabel::PhiPlus), bell_projector(BellLabel::PhiMinus),
          bell_projector(BellLabel::PsiPlus), bell_projector(BellLabel::PsiMinus)};
}

std::array<BellBranch, 4> measure_bell(const JointState& joint) {
  require_density(joint.matrix, 16, "measure_bell");

  const auto projectors = bell_projectors();
  const CMatrix id_ab = CMatrix::identity(4);
  constexpr std::array<std::size_t, 2> keep_ab = {0, 1};

  std::array<BellBranch, 4> branches;
  for (std::size_t k = 0; k < 4; ++k) {
    const CMatrix lifted = kron(id_ab, projectors[k]);
    const CMatrix projected = lifted * joint.matrix * lifted;
    BellBranch& b = branches[k];
    b.label = kBellLabels[k];
    b.probability = trace(projected).real();
    if (b.probability > kNegligibleProbability) {
      b.state = partial_trace(projected, kQubits, keep_ab) * (1.0 / b.probability);
    }
  }
  return branches;
}

double concurrence_general(const CMatrix& rho) {
  require_density(rho, 4, "concurrence_general");

  // rho~ = (sy (x) sy) rho* (sy (x) sy); sy (x) sy is real.
  const CMatrix sy{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
  const CMatrix flip = kron(sy, sy);
  const CMatrix tilde = flip * conjugate(rho) * flip;

  // Eigenvalues of rho rho~ equal those of the Hermitian sqrt(rho) rho~ sqrt(rho).
  const CMatrix root =
      apply_spectral(hermitian_eigen(rho), [](double v) { return std::sqrt(std::max(v, 0.0)); });
  CMatrix similar = root * tilde * root;
  similar = (similar + dagger(similar)) * 0.5;

  auto mu = hermitian_eigenvalues(similar);
  std::array<double, 4> lambda{};
  for (std::size_t i = 0; i < 4; ++i) lambda[i] = mu[i] < kEigenFloor ? 0.0 : std::sqrt(mu[i]);
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

}  // namespace xswap::oracle
