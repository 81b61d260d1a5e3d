#include "xswap/xstate.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace xswap {

namespace {

constexpr double kHalf = 0.5;

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::string format_diagnostics(const XStateDiagnostics& d) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "normalization defect %.3e, min diagonal %.3e, positivity margins %.3e / %.3e",
                d.normalization_defect, d.min_diagonal, d.margin14, d.margin23);
  return buf;
}

}  // namespace

std::string_view to_string(BellLabel label) {
  switch (label) {
    case BellLabel::PhiPlus: return "phi+";
    case BellLabel::PhiMinus: return "phi-";
    case BellLabel::PsiPlus: return "psi+";
    case BellLabel::PsiMinus: return "psi-";
  }
  return "?";
}

std::string_view to_string(EntanglementRegime regime) {
  switch (regime) {
    case EntanglementRegime::Separable: return "Separable";
    case EntanglementRegime::EntangledVia00_11: return "EntangledVia00_11";
    case EntanglementRegime::EntangledVia01_10: return "EntangledVia01_10";
  }
  return "?";
}

XState bell_xstate(BellLabel label) {
  switch (label) {
    case BellLabel::PhiPlus: return {kHalf, 0.0, 0.0, kHalf, kHalf, 0.0};
    case BellLabel::PhiMinus: return {kHalf, 0.0, 0.0, kHalf, -kHalf, 0.0};
    case BellLabel::PsiPlus: return {0.0, kHalf, kHalf, 0.0, 0.0, kHalf};
    case BellLabel::PsiMinus: return {0.0, kHalf, kHalf, 0.0, 0.0, -kHalf};
  }
  return {};
}

XState maximally_mixed_xstate() { return {0.25, 0.25, 0.25, 0.25, 0.0, 0.0}; }

XStateDiagnostics validate(const XState& x, Tolerance tol) {
  XStateDiagnostics d;
  d.finite = std::isfinite(x.d11) && std::isfinite(x.d22) && std::isfinite(x.d33) &&
             std::isfinite(x.d44) && finite(x.o14) && finite(x.o23);
  if (!d.finite) return d;

  d.normalization_defect = std::abs(x.d11 + x.d22 + x.d33 + x.d44 - 1.0);
  d.min_diagonal = std::min({x.d11, x.d22, x.d33, x.d44});
  d.margin14 = sqrt_product(x.d11, x.d44) - std::abs(x.o14);
  d.margin23 = sqrt_product(x.d22, x.d33) - std::abs(x.o23);
  d.passed = d.normalization_defect <= tol.atol && d.min_diagonal >= -tol.atol &&
             d.margin14 >= -tol.atol && d.margin23 >= -tol.atol;
  return d;
}

void require_valid(const XState& x, Tolerance tol) {
  const auto d = validate(x, tol);
  if (!d.passed) {
    throw InvalidStateError(d.finite ? "invalid X-state: " + format_diagnostics(d)
                                     : std::string("invalid X-state: non-finite parameter"));
  }
}

CMatrix to_matrix(const XState& x) {
  require_valid(x);
  CMatrix m(4);
  m(0, 0) = x.d11;
  m(1, 1) = x.d22;
  m(2, 2) = x.d33;
  m(3, 3) = x.d44;
  m(0, 3) = x.o14;
  m(3, 0) = std::conj(x.o14);
  m(1, 2) = x.o23;
  m(2, 1) = std::conj(x.o23);
  return m;
}

double x_defect(const CMatrix& m) {
  if (m.dim() != 4) throw InvalidStateError("x_defect: expected a 4x4 matrix");
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const bool on_pattern = i == j || i + j == 3;
      if (!on_pattern) worst = std::max(worst, std::abs(m(i, j)));
    }
  return worst;
}

XState from_matrix(const CMatrix& m, Tolerance tol) {
  if (m.dim() != 4) throw InvalidStateError("from_matrix: expected a 4x4 matrix");
  if (!m.is_finite()) throw InvalidStateError("from_matrix: non-finite entry");

  const double defect = x_defect(m);
  if (defect > tol.atol) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "not an X-state: off-pattern entry of modulus %.3e", defect);
    throw NonXStateError(buf, defect);
  }

  const double herm = hermiticity_defect(m);
  if (herm > tol.atol) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "from_matrix: matrix is not Hermitian (defect %.3e)", herm);
    throw InvalidStateError(buf);
  }

  XState x{m(0, 0).real(), m(1, 1).real(), m(2, 2).real(), m(3, 3).real(),
           0.5 * (m(0, 3) + std::conj(m(3, 0))), 0.5 * (m(1, 2) + std::conj(m(2, 1)))};
  require_valid(x, tol);
  return x;
}

double concurrence_x(const XState& x) {
  require_valid(x);
  const double via14 = std::abs(x.o14) - sqrt_product(x.d22, x.d33);
  const double via23 = std::abs(x.o23) - sqrt_product(x.d11, x.d44);
  return 2.0 * std::max({0.0, via14, via23});
}

EntanglementRegime entanglement_regime(const XState& x) {
  require_valid(x);
  if (std::abs(x.o14) > sqrt_product(x.d22, x.d33)) return EntanglementRegime::EntangledVia00_11;
  if (std::abs(x.o23) > sqrt_product(x.d11, x.d44)) return EntanglementRegime::EntangledVia01_10;
  return EntanglementRegime::Separable;
}

double phase_difference(const XState& x) { return std::arg(x.o14) - std::arg(x.o23); }

CMatrix phase_alignment_unitary(const XState& x) {
  require_valid(x);
  CMatrix u = CMatrix::identity(2);
  if (x.o14 == Complex{} || x.o23 == Complex{}) return u;
  u(1, 1) = std::polar(1.0, 0.5 * phase_difference(x));
  return u;
}

XState align_phases(const XState& x) {
  const CMatrix local = kron(CMatrix::identity(2), phase_alignment_unitary(x));
  const CMatrix rotated = local * to_matrix(x) * dagger(local);
  XState aligned = x;
  aligned.o14 = rotated(0, 3);
  aligned.o23 = rotated(1, 2);
  return aligned;
}

}  // namespace xswap
