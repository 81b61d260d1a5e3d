// families.hpp: closed-form parameter families.
//
//   pure    a|00> + b|11>, a, b >= 0 real, a^2 + b^2 = 1
//   Werner  (1 - g) I/4 + g |psi+><psi+|
//   alpha   (1 - a)/2 (|psi+><psi+| + |psi-><psi-|) + a |phi+><phi+|
//   beta    b |phi+><phi+| + (1 - b) |psi+><psi+|
//
// Pure-state quantities are entanglement of formation (bits); the mixed
// families report concurrence.

#pragma once

#include <string_view>
#include <vector>

#include "xswap/swap.hpp"
#include "xswap/xstate.hpp"

namespace xswap {

struct PureSwapPoint {
  double a = 0.0;
  double b = 0.0;
  double p_phi = 0.0;      // each of phi+, phi-
  double p_psi = 0.0;      // each of psi+, psi-
  double c_in = 0.0;       // concurrence of the input pairs
  double c_phi_out = 0.0;  // concurrence of the partially entangled phi outcomes
  double e_in = 0.0;
  double e_phi_out = 0.0;
  double e_psi_out = 0.0;
  double e_avg = 0.0;  // probability-weighted over all four outcomes
};

/// Throws std::invalid_argument unless 0 <= a_mod <= 1.
PureSwapPoint pure_swap(double a_mod);

/// Pure input a|00> + b|11> as an X-state.
XState pure_xstate(double a_mod);

/// Binary entropy in bits; 0 at the end points.
double binary_entropy(double p);

/// h((1 + sqrt(1 - c^2)) / 2). Throws std::invalid_argument outside [0, 1].
double eof_from_concurrence(double c);

enum class Family { Werner, Alpha, Beta };

std::string_view to_string(Family family);

struct FamilyPoint {
  Family family = Family::Werner;
  double param = 0.0;
  XState input;
  double c_in = 0.0;
  double c_out_phi = 0.0;
  double c_out_psi = 0.0;
  double c_th_min = 0.0;
  double c_th_max = 0.0;
  OutcomeRegime regime = OutcomeRegime::AllSeparable;
};

XState werner_xstate(double gamma);
XState alpha_xstate(double alpha);
XState beta_xstate(double beta);

/// Each throws std::invalid_argument for a parameter outside [0, 1].
FamilyPoint werner(double gamma);
FamilyPoint alpha_state(double alpha);
FamilyPoint beta_state(double beta);

FamilyPoint family_point(Family family, double param);

/// beta -> beta^2 + (1 - beta)^2, the parameter of the outcome beta-states.
double beta_after_swap(double beta);

/// Inclusive uniform grid; throws unless start <= stop and points >= 2.
std::vector<double> uniform_grid(double start, double stop, std::size_t points);

inline constexpr std::size_t kDefaultGridPoints = 201;

}  // namespace xswap
