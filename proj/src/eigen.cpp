// Cyclic Jacobi diagonalisation of complex Hermitian matrices.
//
// Each rotation zeroes the (p,q) pair with the unitary
//   J_pp = c, J_pq = s e^{i phi}, J_qp = -s e^{-i phi}, J_qq = c,
// where a_pq = |a_pq| e^{i phi}. It is the real symmetric Jacobi rotation
// conjugated by a diagonal phase, so the usual tangent formula applies to
// |a_pq|.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "xswap/core.hpp"

namespace xswap {

namespace {

constexpr double kOffDiagonalStop = 1e-13;
constexpr int kMaxSweeps = 64;

double off_diagonal_norm(const CMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

double frobenius_norm(const CMatrix& a) {
  double sum = 0.0;
  for (const auto& z : a.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

void rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
  const double mod = std::abs(a(p, q));
  if (mod == 0.0) return;
  const Complex phase = a(p, q) / mod;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mod);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex jpq = s * phase;             // J(p,q)
  const Complex jqp = -s * std::conj(phase);  // J(q,p)
  const std::size_t n = a.dim();

  // A <- A J
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp + akq * jqp;
    a(k, q) = akp * jpq + c * akq;
  }
  // A <- J^dagger A
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * mod;
  a(q, q) = aqq + t * mod;

  // V <- V J
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = c * vkp + vkq * jqp;
    v(k, q) = vkp * jpq + c * vkq;
  }
}

}  // namespace

HermitianEigen hermitian_eigen(const CMatrix& input, Tolerance tol) {
  if (!input.is_finite()) throw std::invalid_argument("hermitian_eigen: non-finite entry");
  const double defect = hermiticity_defect(input);
  if (defect > tol.atol) {
    throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian (defect " +
                                std::to_string(defect) + ")");
  }

  const std::size_t n = input.dim();
  CMatrix a = (input + dagger(input)) * 0.5;
  CMatrix v = CMatrix::identity(n);
  const double stop = kOffDiagonalStop * std::max(1.0, frobenius_norm(a));

  int sweep = 0;
  while (off_diagonal_norm(a) >= stop) {
    if (++sweep > kMaxSweeps) throw std::runtime_error("hermitian_eigen: Jacobi did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  HermitianEigen result{std::vector<double>(n), CMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    result.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) result.vectors(i, k) = v(i, order[k]);
  }
  return result;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& a, Tolerance tol) {
  return hermitian_eigen(a, tol).values;
}

}  // namespace xswap
