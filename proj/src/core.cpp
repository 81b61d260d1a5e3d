#include "xswap/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace xswap {

namespace {

void require_same_dim(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

std::size_t checked_product(std::span<const std::size_t> dims, std::size_t expected,
                            const char* what) {
  std::size_t total = 1;
  for (auto d : dims) {
    if (d == 0) throw std::invalid_argument(std::string(what) + ": zero subsystem dimension");
    total *= d;
  }
  if (total != expected) {
    throw std::invalid_argument(std::string(what) + ": subsystem dims multiply to " +
                                std::to_string(total) + ", matrix has dim " +
                                std::to_string(expected));
  }
  return total;
}

// Big-endian mixed-radix digits of `flat`.
void decode(std::size_t flat, std::span<const std::size_t> dims, std::span<std::size_t> digits) {
  for (std::size_t s = dims.size(); s-- > 0;) {
    digits[s] = flat % dims[s];
    flat /= dims[s];
  }
}

}  // namespace

CMatrix::CMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()), entries_() {
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw std::invalid_argument("CMatrix: rows must form a square matrix");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  if (!is_finite()) throw std::invalid_argument("CMatrix: non-finite entry");
}

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> values) {
  CMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

CMatrix CMatrix::outer(std::span<const Complex> v) {
  CMatrix m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

bool CMatrix::is_finite() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require_same_dim(*this, other, "operator+");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require_same_dim(*this, other, "operator-");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex scale) {
  for (auto& z : entries_) z *= scale;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(CMatrix a, Complex scale) { return a *= scale; }
CMatrix operator*(Complex scale, CMatrix a) { return a *= scale; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "operator*");
  const std::size_t n = a.dim();
  CMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  CMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

CMatrix dagger(const CMatrix& a) {
  CMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

CMatrix conjugate(const CMatrix& a) {
  CMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = std::conj(a(i, j));
  return out;
}

Complex trace(const CMatrix& a) {
  Complex sum{};
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a(i, i);
  return sum;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double worst = 0.0;
  const auto ea = a.entries(), eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
  return worst;
}

double hermiticity_defect(const CMatrix& a) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j)
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
  return worst;
}

CMatrix partial_trace(const CMatrix& rho, std::span<const std::size_t> subsystem_dims,
                      std::span<const std::size_t> keep) {
  checked_product(subsystem_dims, rho.dim(), "partial_trace");
  const std::size_t k = subsystem_dims.size();
  std::vector<bool> kept(k, false);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= k) throw std::invalid_argument("partial_trace: keep index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument("partial_trace: keep must be strictly increasing");
    kept[keep[i]] = true;
  }

  std::size_t out_dim = 1;
  for (auto s : keep) out_dim *= subsystem_dims[s];
  CMatrix out(out_dim);

  std::vector<std::size_t> row_digits(k), col_digits(k);
  auto kept_index = [&](std::span<const std::size_t> digits) {
    std::size_t flat = 0;
    for (auto s : keep) flat = flat * subsystem_dims[s] + digits[s];
    return flat;
  };

  for (std::size_t r = 0; r < rho.dim(); ++r) {
    decode(r, subsystem_dims, row_digits);
    for (std::size_t c = 0; c < rho.dim(); ++c) {
      decode(c, subsystem_dims, col_digits);
      bool diagonal_in_traced = true;
      for (std::size_t s = 0; s < k && diagonal_in_traced; ++s)
        if (!kept[s] && row_digits[s] != col_digits[s]) diagonal_in_traced = false;
      if (!diagonal_in_traced) continue;
      out(kept_index(row_digits), kept_index(col_digits)) += rho(r, c);
    }
  }
  return out;
}

CMatrix permute_subsystems(const CMatrix& rho, std::span<const std::size_t> subsystem_dims,
                           std::span<const std::size_t> order) {
  checked_product(subsystem_dims, rho.dim(), "permute_subsystems");
  const std::size_t k = subsystem_dims.size();
  if (order.size() != k) throw std::invalid_argument("permute_subsystems: order size mismatch");
  std::vector<std::size_t> check(order.begin(), order.end());
  std::sort(check.begin(), check.end());
  for (std::size_t s = 0; s < k; ++s)
    if (check[s] != s) throw std::invalid_argument("permute_subsystems: order is not a permutation");

  // Flat index in the new ordering of each old flat index.
  std::vector<std::size_t> new_index(rho.dim());
  std::vector<std::size_t> digits(k);
  for (std::size_t flat = 0; flat < rho.dim(); ++flat) {
    decode(flat, subsystem_dims, digits);
    std::size_t mapped = 0;
    for (std::size_t s = 0; s < k; ++s) mapped = mapped * subsystem_dims[order[s]] + digits[order[s]];
    new_index[flat] = mapped;
  }

  CMatrix out(rho.dim());
  for (std::size_t r = 0; r < rho.dim(); ++r)
    for (std::size_t c = 0; c < rho.dim(); ++c) out(new_index[r], new_index[c]) = rho(r, c);
  return out;
}

DensityDiagnostics validate_density(const CMatrix& rho, Tolerance tol) {
  DensityDiagnostics diag;
  diag.finite = rho.is_finite();
  if (!diag.finite || rho.dim() == 0) {
    diag.passed = false;
    return diag;
  }
  diag.hermiticity_defect = hermiticity_defect(rho);
  diag.trace_defect = std::abs(trace(rho) - 1.0);

  // Spectrum of the Hermitian part, so a non-Hermitian input still gets a
  // negativity figure.
  CMatrix herm = (rho + dagger(rho)) * 0.5;
  const auto values = hermitian_eigenvalues(herm, tol);
  diag.min_eigenvalue = values.back();

  diag.passed = diag.hermiticity_defect <= tol.atol && diag.trace_defect <= tol.atol &&
                diag.min_eigenvalue >= -tol.atol;
  return diag;
}

}  // namespace xswap
