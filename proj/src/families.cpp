#include "xswap/families.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace xswap {

namespace {

constexpr double kRangeSlack = 1e-12;

void require_unit_interval(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument(std::string(what) + ": parameter must lie in [0, 1], got " +
                                std::to_string(v));
}

void fill_from_input(FamilyPoint& p) { p.regime = outcome_entanglement_conditions(p.input); }

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Werner: return "werner";
    case Family::Alpha: return "alpha";
    case Family::Beta: return "beta";
  }
  return "?";
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double eof_from_concurrence(double c) {
  if (!(c >= -kRangeSlack && c <= 1.0 + kRangeSlack))
    throw std::invalid_argument("eof_from_concurrence: concurrence must lie in [0, 1], got " +
                                std::to_string(c));
  c = std::clamp(c, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

XState pure_xstate(double a_mod) {
  require_unit_interval(a_mod, "pure_xstate");
  const double b = std::sqrt(1.0 - a_mod * a_mod);
  return {a_mod * a_mod, 0.0, 0.0, b * b, a_mod * b, 0.0};
}

PureSwapPoint pure_swap(double a_mod) {
  require_unit_interval(a_mod, "pure_swap");
  PureSwapPoint p;
  p.a = a_mod;
  p.b = std::sqrt(1.0 - a_mod * a_mod);
  const double a2 = p.a * p.a;
  const double b2 = p.b * p.b;
  const double quartic = a2 * a2 + b2 * b2;

  p.p_phi = quartic / 2.0;
  p.p_psi = a2 * b2;
  p.c_in = std::min(1.0, 2.0 * p.a * p.b);
  p.c_phi_out = std::min(1.0, 2.0 * a2 * b2 / quartic);

  p.e_in = eof_from_concurrence(p.c_in);
  p.e_phi_out = eof_from_concurrence(p.c_phi_out);
  // The psi outcomes are exact Bell states whenever they occur.
  p.e_psi_out = p.p_psi > 0.0 ? 1.0 : 0.0;
  p.e_avg = 2.0 * p.p_phi * p.e_phi_out + 2.0 * p.p_psi * p.e_psi_out;
  return p;
}

XState werner_xstate(double gamma) {
  require_unit_interval(gamma, "werner");
  return {(1.0 - gamma) / 4.0, (1.0 + gamma) / 4.0, (1.0 + gamma) / 4.0, (1.0 - gamma) / 4.0,
          0.0, gamma / 2.0};
}

XState alpha_xstate(double alpha) {
  require_unit_interval(alpha, "alpha_state");
  return {alpha / 2.0, (1.0 - alpha) / 2.0, (1.0 - alpha) / 2.0, alpha / 2.0, alpha / 2.0, 0.0};
}

XState beta_xstate(double beta) {
  require_unit_interval(beta, "beta_state");
  return {beta / 2.0, (1.0 - beta) / 2.0, (1.0 - beta) / 2.0, beta / 2.0, beta / 2.0,
          (1.0 - beta) / 2.0};
}

FamilyPoint werner(double gamma) {
  FamilyPoint p;
  p.family = Family::Werner;
  p.param = gamma;
  p.input = werner_xstate(gamma);
  p.c_in = std::max(0.0, (3.0 * gamma - 1.0) / 2.0);
  p.c_out_phi = p.c_out_psi = std::max(0.0, (3.0 * gamma * gamma - 1.0) / 2.0);
  p.c_th_min = p.c_th_max = std::sqrt((1.0 - gamma * gamma) / 2.0) - (1.0 - gamma) / 2.0;
  fill_from_input(p);
  return p;
}

FamilyPoint alpha_state(double alpha) {
  FamilyPoint p;
  p.family = Family::Alpha;
  p.param = alpha;
  p.input = alpha_xstate(alpha);
  p.c_in = std::max(0.0, 2.0 * alpha - 1.0);
  p.c_out_phi = p.c_out_psi = std::max(0.0, alpha * (3.0 * alpha - 2.0));
  // Below 1/2 the weaker coherence bound switches from (1 - alpha)/2 to alpha/2.
  const double root = std::sqrt(2.0 * alpha * (1.0 - alpha));
  p.c_th_min = p.c_th_max = alpha > 0.5 ? root - (1.0 - alpha) : root - alpha;
  fill_from_input(p);
  return p;
}

FamilyPoint beta_state(double beta) {
  FamilyPoint p;
  p.family = Family::Beta;
  p.param = beta;
  p.input = beta_xstate(beta);
  p.c_in = std::abs(1.0 - 2.0 * beta);
  p.c_out_phi = p.c_out_psi = (1.0 - 2.0 * beta) * (1.0 - 2.0 * beta);
  if (beta < 0.5) {
    p.c_th_min = std::sqrt(beta * (2.0 - 3.0 * beta)) - beta;
  } else if (beta > 0.5) {
    p.c_th_min = std::sqrt((3.0 * beta - 1.0) * (1.0 - beta)) - (1.0 - beta);
  } else {
    p.c_th_min = 0.0;
  }
  p.c_th_max = p.c_th_min;
  fill_from_input(p);
  return p;
}

FamilyPoint family_point(Family family, double param) {
  switch (family) {
    case Family::Werner: return werner(param);
    case Family::Alpha: return alpha_state(param);
    case Family::Beta: return beta_state(param);
  }
  throw std::invalid_argument("family_point: unknown family");
}

double beta_after_swap(double beta) { return beta * beta + (1.0 - beta) * (1.0 - beta); }

std::vector<double> uniform_grid(double start, double stop, std::size_t points) {
  if (!(start <= stop)) throw std::invalid_argument("uniform_grid: start must not exceed stop");
  if (points < 2) throw std::invalid_argument("uniform_grid: need at least 2 points");
  std::vector<double> grid(points);
  const double step = (stop - start) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = start + step * static_cast<double>(i);
  grid.back() = stop;
  return grid;
}

}  // namespace xswap
