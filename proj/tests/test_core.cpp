#include <array>
#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace xswap;
using xswap::cli::SplitMix64;
using Catch::Matchers::WithinAbs;

namespace {

const CMatrix kPhiPlus = [] {
  const double r = 1.0 / std::sqrt(2.0);
  const std::array<Complex, 4> v = {r, 0.0, 0.0, r};
  return CMatrix::outer(v);
}();

}  // namespace

TEST_CASE("kron of identities and projectors", "[core][kron]") {
  CHECK(max_abs_diff(kron(CMatrix::identity(2), CMatrix::identity(2)), CMatrix::identity(4)) == 0.0);

  const std::array<double, 2> p0 = {1.0, 0.0};
  const std::array<double, 2> p1 = {0.0, 1.0};
  const std::array<double, 4> expected = {0.0, 1.0, 0.0, 0.0};
  CHECK(max_abs_diff(kron(CMatrix::diagonal(p0), CMatrix::diagonal(p1)),
                     CMatrix::diagonal(expected)) == 0.0);
}

TEST_CASE("kron follows the documented index map", "[core][kron]") {
  const CMatrix a{{1.0, 2.0}, {3.0, 4.0}};
  const CMatrix b{{0.0, Complex(0, 1)}, {5.0, 6.0}};
  const CMatrix k = kron(a, b);
  REQUIRE(k.dim() == 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t s = 0; s < 2; ++s) CHECK(k(i * 2 + r, j * 2 + s) == a(i, j) * b(r, s));
}

TEST_CASE("kron is associative on integer entries", "[core][kron]") {
  const CMatrix a{{1.0, -2.0}, {3.0, 0.0}};
  const CMatrix b{{2.0, 1.0}, {0.0, 5.0}};
  const CMatrix c{{-1.0, 4.0}, {7.0, 1.0}};
  CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) == 0.0);
}

TEST_CASE("kron of random X-states is a density matrix", "[core][kron]") {
  SplitMix64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const CMatrix j = kron(to_matrix(cli::draw_xstate(rng)), to_matrix(cli::draw_xstate(rng)));
    CHECK(validate_density(j).passed);
  }
}

TEST_CASE("dagger", "[core]") {
  CHECK(max_abs_diff(dagger(CMatrix::identity(4)), CMatrix::identity(4)) == 0.0);
  CHECK(max_abs_diff(dagger(kPhiPlus), kPhiPlus) == 0.0);

  SplitMix64 rng(3);
  CMatrix a(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) a(i, j) = Complex(rng.uniform(), rng.uniform());
  CHECK(max_abs_diff(dagger(dagger(a)), a) == 0.0);
  CHECK(dagger(a)(1, 2) == std::conj(a(2, 1)));
}

TEST_CASE("CMatrix rejects bad construction", "[core]") {
  CHECK_THROWS_AS((CMatrix{{1.0, 2.0}, {3.0}}), std::invalid_argument);
  CHECK_THROWS_AS((CMatrix{{1.0, 2.0}}), std::invalid_argument);
  CHECK_THROWS_AS((CMatrix{{std::nan(""), 0.0}, {0.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(CMatrix::identity(2) * CMatrix::identity(4), std::invalid_argument);
  CHECK_THROWS_AS(Tolerance(0.0), std::invalid_argument);
  CHECK_THROWS_AS(Tolerance(-1e-3), std::invalid_argument);
}

TEST_CASE("partial trace of simple states", "[core][partial_trace]") {
  SECTION("factorized |0><0| (x) rho") {
    SplitMix64 rng(5);
    const CMatrix rho = testing::random_density(rng, 4);
    const std::array<double, 2> p0 = {1.0, 0.0};
    const CMatrix joint = kron(CMatrix::diagonal(p0), rho);
    const std::array<std::size_t, 2> dims = {2, 4};
    const std::array<std::size_t, 1> keep = {1};
    CHECK(max_abs_diff(partial_trace(joint, dims, keep), rho) < 1e-15);
  }
  SECTION("Bell marginal is maximally mixed") {
    const std::array<std::size_t, 2> dims = {2, 2};
    const std::array<std::size_t, 1> keep = {0};
    CHECK(max_abs_diff(partial_trace(kPhiPlus, dims, keep), CMatrix::identity(2) * 0.5) < 1e-15);
  }
  SECTION("keeping both factors is the identity map") {
    const std::array<std::size_t, 2> dims = {2, 2};
    const std::array<std::size_t, 2> keep = {0, 1};
    CHECK(max_abs_diff(partial_trace(kPhiPlus, dims, keep), kPhiPlus) == 0.0);
  }
}

TEST_CASE("partial trace preserves trace", "[core][partial_trace][property]") {
  SplitMix64 rng(17);
  const std::array<std::size_t, 4> dims = {2, 2, 2, 2};
  const std::array<std::size_t, 2> keep_ab = {0, 1};
  const std::array<std::size_t, 1> keep_c = {2};
  const std::array<std::size_t, 0> keep_none = {};
  for (int i = 0; i < 200; ++i) {
    const CMatrix x = testing::random_density(rng, 16) * (1.0 + 3.0 * rng.uniform());
    const Complex tr = trace(x);
    CHECK(std::abs(trace(partial_trace(x, dims, keep_ab)) - tr) < 1e-12);
    CHECK(std::abs(trace(partial_trace(x, dims, keep_c)) - tr) < 1e-12);
    const CMatrix all = partial_trace(x, dims, keep_none);
    REQUIRE(all.dim() == 1);
    CHECK(std::abs(all(0, 0) - tr) < 1e-12);
  }
}

TEST_CASE("partial trace argument checks", "[core][partial_trace]") {
  const std::array<std::size_t, 2> wrong = {2, 3};
  const std::array<std::size_t, 1> keep0 = {0};
  CHECK_THROWS_AS(partial_trace(kPhiPlus, wrong, keep0), std::invalid_argument);
  const std::array<std::size_t, 2> dims = {2, 2};
  const std::array<std::size_t, 2> unordered = {1, 0};
  CHECK_THROWS_AS(partial_trace(kPhiPlus, dims, unordered), std::invalid_argument);
  const std::array<std::size_t, 1> out_of_range = {2};
  CHECK_THROWS_AS(partial_trace(kPhiPlus, dims, out_of_range), std::invalid_argument);
}

TEST_CASE("permute_subsystems swaps tensor factors", "[core]") {
  SplitMix64 rng(23);
  const CMatrix a = testing::random_density(rng, 2);
  const CMatrix b = testing::random_density(rng, 4);
  const std::array<std::size_t, 2> dims = {2, 4};
  const std::array<std::size_t, 2> order = {1, 0};
  CHECK(max_abs_diff(permute_subsystems(kron(a, b), dims, order), kron(b, a)) < 1e-15);
}

TEST_CASE("eigenvalues of known matrices", "[core][eigen]") {
  const std::array<double, 4> d = {0.1, 0.4, 0.2, 0.3};
  const auto ev = hermitian_eigenvalues(CMatrix::diagonal(d));
  REQUIRE(ev.size() == 4);
  CHECK_THAT(ev[0], WithinAbs(0.4, 1e-15));
  CHECK_THAT(ev[1], WithinAbs(0.3, 1e-15));
  CHECK_THAT(ev[2], WithinAbs(0.2, 1e-15));
  CHECK_THAT(ev[3], WithinAbs(0.1, 1e-15));

  const auto bell = hermitian_eigenvalues(kPhiPlus);
  CHECK_THAT(bell[0], WithinAbs(1.0, 1e-14));
  for (std::size_t i = 1; i < 4; ++i) CHECK_THAT(bell[i], WithinAbs(0.0, 1e-14));
}

TEST_CASE("eigen decomposition reconstructs random Hermitian matrices", "[core][eigen][property]") {
  SplitMix64 rng(29);
  for (std::size_t dim : {2u, 4u, 16u}) {
    for (int i = 0; i < 100; ++i) {
      const CMatrix a = testing::random_hermitian(rng, dim);
      const HermitianEigen eig = hermitian_eigen(a);
      const CMatrix back = apply_spectral(eig, [](double v) { return v; });
      CHECK(max_abs_diff(back, a) <= 1e-10);
      double sum = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        sum += eig.values[k];
        if (k > 0) CHECK(eig.values[k - 1] >= eig.values[k]);
      }
      CHECK(std::abs(sum - trace(a).real()) < 1e-10);
      CHECK(max_abs_diff(dagger(eig.vectors) * eig.vectors, CMatrix::identity(dim)) < 1e-12);
    }
  }
}

TEST_CASE("eigensolver rejects non-Hermitian input", "[core][eigen]") {
  const CMatrix a{{1.0, 0.5}, {0.0, 1.0}};
  CHECK_THROWS_AS(hermitian_eigenvalues(a), std::invalid_argument);
}

TEST_CASE("density eigenvalues stay in the unit interval", "[core][eigen][property]") {
  SplitMix64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto ev = hermitian_eigenvalues(testing::random_density(rng, 16));
    double sum = 0.0;
    for (double v : ev) {
      CHECK(v >= -1e-10);
      CHECK(v <= 1.0 + 1e-10);
      sum += v;
    }
    CHECK(std::abs(sum - 1.0) < 1e-10);
  }
}

TEST_CASE("validate_density", "[core][validate]") {
  CHECK(validate_density(CMatrix::identity(4) * 0.25).passed);

  const std::array<double, 4> bad = {0.6, 0.6, -0.1, -0.1};
  const DensityDiagnostics diag = validate_density(CMatrix::diagonal(bad));
  CHECK_FALSE(diag.passed);
  CHECK_THAT(diag.min_eigenvalue, WithinAbs(-0.1, 1e-15));

  CMatrix skew = CMatrix::identity(2) * 0.5;
  skew(0, 1) = 0.2;
  CHECK_FALSE(validate_density(skew).passed);
  CHECK_THAT(validate_density(skew).hermiticity_defect, WithinAbs(0.2, 1e-15));

  CHECK_FALSE(validate_density(CMatrix::identity(2)).passed);
  CHECK_THAT(validate_density(CMatrix::identity(2)).trace_defect, WithinAbs(1.0, 1e-15));
}
