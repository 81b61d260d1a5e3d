#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "xswap/families.hpp"

using namespace xswap;
using Catch::Matchers::WithinAbs;

TEST_CASE("binary entropy and EoF", "[families][eof]") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK_THAT(binary_entropy(0.5), WithinAbs(1.0, 1e-15));
  CHECK(eof_from_concurrence(0.0) == 0.0);
  CHECK_THAT(eof_from_concurrence(1.0), WithinAbs(1.0, 1e-15));
  CHECK_THAT(eof_from_concurrence(0.6), WithinAbs(0.468995593589281221, 1e-15));
  CHECK_THROWS_AS(eof_from_concurrence(1.1), std::invalid_argument);
  CHECK_THROWS_AS(eof_from_concurrence(-0.01), std::invalid_argument);

  double prev = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    const double e = eof_from_concurrence(i / 1000.0);
    CHECK(e > prev);
    prev = e;
  }
}

TEST_CASE("pure baseline", "[families][pure]") {
  SECTION("balanced amplitudes give four Bell outcomes") {
    const PureSwapPoint p = pure_swap(1.0 / std::sqrt(2.0));
    CHECK_THAT(p.p_phi, WithinAbs(0.25, 1e-15));
    CHECK_THAT(p.p_psi, WithinAbs(0.25, 1e-15));
    CHECK_THAT(p.e_in, WithinAbs(1.0, 1e-12));
    CHECK_THAT(p.e_phi_out, WithinAbs(1.0, 1e-12));
    CHECK(p.e_psi_out == 1.0);
    CHECK_THAT(p.e_avg, WithinAbs(1.0, 1e-12));
  }
  SECTION("product input") {
    const PureSwapPoint p = pure_swap(0.0);
    CHECK(p.p_psi == 0.0);
    CHECK(p.p_phi == 0.5);
    CHECK(p.e_in == 0.0);
    CHECK(p.e_phi_out == 0.0);
    CHECK(p.e_psi_out == 0.0);
    CHECK(p.e_avg == 0.0);
  }
  SECTION("a = 0.6") {
    const PureSwapPoint p = pure_swap(0.6);
    CHECK_THAT(p.p_psi, WithinAbs(0.2304, 1e-15));
    CHECK_THAT(p.p_phi, WithinAbs(0.2696, 1e-15));
    CHECK_THAT(p.c_phi_out, WithinAbs(0.854599406528189911, 1e-15));
  }
  CHECK_THROWS_AS(pure_swap(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(pure_swap(1.5), std::invalid_argument);
}

TEST_CASE("pure baseline agrees with swapping the pure X-state", "[families][pure]") {
  for (double a : uniform_grid(0.0, 1.0, 101)) {
    const PureSwapPoint p = pure_swap(a);
    const XState x = pure_xstate(a);
    const SwapOutcomeSet set = swap_outcomes(x, x);
    CHECK_THAT(set[BellLabel::PhiPlus].probability, WithinAbs(p.p_phi, 1e-15));
    CHECK_THAT(set[BellLabel::PsiPlus].probability, WithinAbs(p.p_psi, 1e-15));
    CHECK_THAT(concurrence_x(x), WithinAbs(p.c_in, 1e-15));
    if (set[BellLabel::PhiPlus].defined())
      CHECK_THAT(set[BellLabel::PhiPlus].concurrence, WithinAbs(p.c_phi_out, 1e-12));
  }
}

TEST_CASE("pure baseline inequalities", "[families][pure][property]") {
  for (double a : uniform_grid(0.0, 1.0, 2001)) {
    const PureSwapPoint p = pure_swap(a);
    CHECK(std::abs(2.0 * p.p_phi + 2.0 * p.p_psi - 1.0) <= 1e-12);
    CHECK(p.e_avg <= p.e_in + 1e-12);
    CHECK(p.p_psi <= p.p_phi);
    if (p.p_psi > 0.0) CHECK(p.e_psi_out == 1.0);
  }
}

TEST_CASE("Werner family", "[families][werner]") {
  const FamilyPoint one = werner(1.0);
  CHECK(one.input.d22 == 0.5);
  CHECK(one.input.o23 == Complex(0.5));
  CHECK(one.c_in == 1.0);
  CHECK(one.c_out_phi == 1.0);
  CHECK(one.c_out_psi == 1.0);

  CHECK(werner(1.0 / 3.0).c_in == 0.0);

  const FamilyPoint p = werner(0.8);
  CHECK_THAT(p.c_in, WithinAbs(0.7, 1e-15));
  CHECK_THAT(p.c_out_phi, WithinAbs(0.46, 1e-15));
  CHECK_THAT(p.c_out_psi, WithinAbs(0.46, 1e-15));
  CHECK_THAT(p.c_th_min, WithinAbs(0.324264068711928515, 1e-15));
  CHECK(p.regime == OutcomeRegime::FourEntangled);

  CHECK_THROWS_AS(werner(1.01), std::invalid_argument);
}

TEST_CASE("alpha family", "[families][alpha]") {
  const FamilyPoint one = alpha_state(1.0);
  CHECK(one.c_out_phi == 1.0);
  CHECK(max_abs_diff(to_matrix(one.input), to_matrix(bell_xstate(BellLabel::PhiPlus))) == 0.0);

  CHECK_THAT(alpha_state(2.0 / 3.0).c_out_phi, WithinAbs(0.0, 1e-15));
  CHECK(alpha_state(2.0 / 3.0).regime != OutcomeRegime::FourEntangled);
  CHECK_THAT(alpha_state(0.8).c_out_phi, WithinAbs(0.32, 1e-15));
  CHECK(alpha_state(0.9).regime == OutcomeRegime::FourEntangled);
}

TEST_CASE("alpha outcomes at 0.8", "[families][alpha]") {
  // phi outcomes are Bell-diagonal with weights 0.66 phi+, 0.02 phi-, 0.16 on
  // each of psi+-; psi outcomes are sigma_x on A of those.
  const XState x = alpha_xstate(0.8);
  const SwapOutcomeSet set = swap_outcomes(x, x);
  const XState& phi = *set[BellLabel::PhiPlus].state;
  CHECK_THAT(phi.d11, WithinAbs(0.34, 1e-15));
  CHECK_THAT(phi.d22, WithinAbs(0.16, 1e-15));
  CHECK_THAT(phi.d33, WithinAbs(0.16, 1e-15));
  CHECK_THAT(std::abs(phi.o14), WithinAbs(0.32, 1e-15));
  CHECK(std::abs(phi.o23) == 0.0);

  const CMatrix xa = kron(testing::sigma_x(), CMatrix::identity(2));
  for (auto [from, to] : {std::pair{BellLabel::PhiPlus, BellLabel::PsiPlus},
                          std::pair{BellLabel::PhiMinus, BellLabel::PsiMinus}}) {
    CHECK(max_abs_diff(testing::conjugate_by(xa, to_matrix(*set[from].state)),
                       to_matrix(*set[to].state)) < 1e-15);
  }
  for (const auto& o : set.outcomes) {
    CHECK_THAT(o.concurrence, WithinAbs(0.32, 1e-15));
    CHECK_THAT(oracle::concurrence_general(to_matrix(*o.state)), WithinAbs(0.32, 1e-10));
  }
}

TEST_CASE("beta family", "[families][beta]") {
  for (double b : {0.0, 1.0}) {
    const FamilyPoint p = beta_state(b);
    CHECK(p.c_in == 1.0);
    CHECK(p.c_out_phi == 1.0);
  }
  const FamilyPoint half = beta_state(0.5);
  CHECK(half.c_in == 0.0);
  CHECK(half.c_out_phi == 0.0);
  CHECK(half.regime == OutcomeRegime::AllSeparable);

  const FamilyPoint p = beta_state(0.9);
  CHECK_THAT(p.c_in, WithinAbs(0.8, 1e-15));
  CHECK_THAT(p.c_out_phi, WithinAbs(0.64, 1e-15));
  CHECK_THAT(beta_after_swap(0.9), WithinAbs(0.82, 1e-15));
}

TEST_CASE("beta outcomes are beta-states up to local unitaries", "[families][beta]") {
  const CMatrix xa = kron(testing::sigma_x(), CMatrix::identity(2));
  const CMatrix zb = kron(CMatrix::identity(2), testing::sigma_z());
  for (double b : uniform_grid(0.0, 1.0, 51)) {
    const XState x = beta_xstate(b);
    const SwapOutcomeSet set = swap_outcomes(x, x);
    const double bp = beta_after_swap(b);
    const CMatrix target = to_matrix(beta_xstate(bp));

    const CMatrix phi = to_matrix(from_matrix(to_matrix(*set[BellLabel::PhiPlus].state)));
    CHECK(max_abs_diff(phi, target) < 1e-15);
    CHECK(max_abs_diff(testing::conjugate_by(zb, phi),
                       to_matrix(*set[BellLabel::PhiMinus].state)) < 1e-15);
    // psi+ carries parameter 1 - beta', i.e. sigma_x on A of the phi+ outcome.
    const CMatrix psi = to_matrix(*set[BellLabel::PsiPlus].state);
    CHECK(max_abs_diff(psi, to_matrix(beta_xstate(1.0 - bp))) < 1e-15);
    CHECK(max_abs_diff(testing::conjugate_by(xa, phi), psi) < 1e-15);
  }
}

TEST_CASE("beta closure under repeated swapping", "[families][beta][property]") {
  for (double b : uniform_grid(0.0, 1.0, 201)) {
    const double bp = beta_after_swap(b);
    const XState out = *swap_outcomes(beta_xstate(b), beta_xstate(b))[BellLabel::PhiPlus].state;
    const XState again = *swap_outcomes(out, out)[BellLabel::PhiPlus].state;
    CHECK(max_abs_diff(to_matrix(again), to_matrix(beta_xstate(beta_after_swap(bp)))) < 1e-14);
    CHECK(std::abs(beta_state(b).c_out_phi - beta_state(b).c_in * beta_state(b).c_in) <= 1e-12);
  }
}

TEST_CASE("family points match the swapped outcomes", "[families][property]") {
  for (Family f : {Family::Werner, Family::Alpha, Family::Beta}) {
    for (double t : uniform_grid(0.0, 1.0, kDefaultGridPoints)) {
      const FamilyPoint p = family_point(f, t);
      CHECK(validate(p.input).passed);
      CHECK_THAT(p.c_in, WithinAbs(concurrence_x(p.input), 1e-12));
      const SwapOutcomeSet set = swap_outcomes(p.input, p.input);
      CHECK(std::abs(set[BellLabel::PhiPlus].concurrence - p.c_out_phi) <= 1e-10);
      CHECK(std::abs(set[BellLabel::PsiPlus].concurrence - p.c_out_psi) <= 1e-10);
      for (double c : {p.c_in, p.c_out_phi, p.c_out_psi}) {
        CHECK(c >= 0.0);
        CHECK(c <= 1.0);
      }
      if (f != Family::Beta) CHECK(p.c_th_min == p.c_th_max);

      const ThresholdReport r = thresholds(p.input);
      CHECK_THAT(p.c_th_min, WithinAbs(r.c_th_min, 1e-12));
      CHECK_THAT(p.c_th_max, WithinAbs(r.c_th_max, 1e-12));
      CHECK(p.regime == r.regime);
    }
  }
}

TEST_CASE("uniform grid", "[families]") {
  const auto g = uniform_grid(0.0, 1.0, 5);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == 0.0);
  CHECK(g[2] == 0.5);
  CHECK(g.back() == 1.0);
  CHECK(uniform_grid(0.0, 1.0, kDefaultGridPoints).size() == 201);
  CHECK_THROWS_AS(uniform_grid(1.0, 0.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(uniform_grid(0.0, 1.0, 1), std::invalid_argument);
}
