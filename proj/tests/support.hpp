// Shared helpers for the unit and acceptance tests.

#pragma once

#include <cmath>
#include <numbers>
#include <optional>

#include "xswap/cli/random.hpp"
#include "xswap/core.hpp"
#include "xswap/oracle.hpp"
#include "xswap/swap.hpp"
#include "xswap/xstate.hpp"

namespace xswap::testing {

inline constexpr std::size_t kPropertyCases = 1000;

inline Complex polar_unit(double phase) { return std::polar(1.0, phase); }

/// Dense random Hermitian matrix with entries in [-1, 1].
inline CMatrix random_hermitian(cli::SplitMix64& rng, std::size_t dim) {
  CMatrix a(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    a(i, i) = 2.0 * rng.uniform() - 1.0;
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Complex z(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
      a(i, j) = z;
      a(j, i) = std::conj(z);
    }
  }
  return a;
}

/// Random PSD matrix with unit trace, built as G G^dagger / tr.
inline CMatrix random_density(cli::SplitMix64& rng, std::size_t dim) {
  CMatrix g(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      g(i, j) = Complex(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
  CMatrix rho = g * dagger(g);
  return rho * (1.0 / trace(rho).real());
}

/// Haar-ish random SU(2) element from Euler angles.
inline CMatrix random_unitary2(cli::SplitMix64& rng) {
  const double two_pi = 2.0 * std::numbers::pi;
  const double theta = std::acos(1.0 - 2.0 * rng.uniform()) / 2.0;
  const double a = two_pi * rng.uniform();
  const double b = two_pi * rng.uniform();
  const Complex u00 = std::cos(theta) * polar_unit(a);
  const Complex u01 = std::sin(theta) * polar_unit(b);
  return CMatrix{{u00, u01}, {-std::conj(u01), std::conj(u00)}};
}

/// Same diagonal as x with both coherences pushed to the positivity bound.
inline XState full_coherence(XState x, bool both = true) {
  x.o14 = std::polar(sqrt_product(x.d11, x.d44), std::arg(x.o14));
  if (both) x.o23 = std::polar(sqrt_product(x.d22, x.d33), std::arg(x.o23));
  return x;
}

inline double oracle_concurrence(const std::optional<CMatrix>& rho) {
  return rho ? oracle::concurrence_general(*rho) : 0.0;
}

inline CMatrix sigma_x() { return CMatrix{{0.0, 1.0}, {1.0, 0.0}}; }
inline CMatrix sigma_z() { return CMatrix{{1.0, 0.0}, {0.0, -1.0}}; }

/// U rho U^dagger
inline CMatrix conjugate_by(const CMatrix& u, const CMatrix& rho) { return u * rho * dagger(u); }

}  // namespace xswap::testing
