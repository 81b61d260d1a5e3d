// core.hpp: dense complex matrices for 2-, 4- and 16-dimensional Hilbert spaces.
//
// Subsystems are numbered left to right in tensor order and flat indices are
// big-endian mixed radix: basis vector (i0, ..., i_{k-1}) over dims
// (n0, ..., n_{k-1}) sits at ((i0 * n1 + i1) * n2 + i2) ...

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace xswap {

using Complex = std::complex<double>;

/// Absolute tolerance used by every validity check.
struct Tolerance {
  double atol = 1e-10;

  Tolerance() = default;
  explicit Tolerance(double value) : atol(value) {
    if (!(value > 0.0)) throw std::invalid_argument("Tolerance: atol must be > 0");
  }
};

/// Probabilities at or below this are treated as an outcome that never occurs.
inline constexpr double kNegligibleProbability = 1e-14;

class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim);

  /// Row-major nested list. Throws on ragged or non-square input, or
  /// on non-finite entries.
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t dim);
  static CMatrix diagonal(std::span<const double> values);
  /// |v><v|
  static CMatrix outer(std::span<const Complex> v);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }

  bool is_finite() const noexcept;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Complex scale);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(CMatrix a, Complex scale);
CMatrix operator*(Complex scale, CMatrix a);
CMatrix operator*(const CMatrix& a, const CMatrix& b);

CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix dagger(const CMatrix& a);
CMatrix conjugate(const CMatrix& a);
Complex trace(const CMatrix& a);

/// Largest entrywise modulus of a - b. Dimensions must agree.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// max |a(i,j) - conj(a(j,i))|
double hermiticity_defect(const CMatrix& a);

/// Reduced matrix on the subsystems listed in `keep` (strictly increasing).
/// An empty `keep` traces everything and yields the 1x1 matrix [trace(rho)].
CMatrix partial_trace(const CMatrix& rho, std::span<const std::size_t> subsystem_dims,
                      std::span<const std::size_t> keep);

/// Reorders tensor factors: subsystem s of the result is subsystem
/// `order[s]` of the input.
CMatrix permute_subsystems(const CMatrix& rho, std::span<const std::size_t> subsystem_dims,
                           std::span<const std::size_t> order);

struct HermitianEigen {
  std::vector<double> values;  // descending
  CMatrix vectors;             // column k belongs to values[k]
};

/// Cyclic complex Jacobi. Throws std::invalid_argument when the input is not
/// Hermitian within tol.
HermitianEigen hermitian_eigen(const CMatrix& a, Tolerance tol = {});
std::vector<double> hermitian_eigenvalues(const CMatrix& a, Tolerance tol = {});

/// f(A) = V f(Lambda) V^dagger for Hermitian A.
template <typename Fn>
CMatrix apply_spectral(const HermitianEigen& eig, Fn&& fn) {
  const std::size_t n = eig.vectors.dim();
  CMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double f = fn(eig.values[k]);
    if (f == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = eig.vectors(i, k) * f;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.vectors(j, k));
    }
  }
  return out;
}

struct DensityDiagnostics {
  double hermiticity_defect = 0.0;
  double trace_defect = 0.0;
  double min_eigenvalue = 0.0;
  bool finite = true;
  bool passed = false;
};

DensityDiagnostics validate_density(const CMatrix& rho, Tolerance tol = {});

}  // namespace xswap
