#include "xswap/cli/random.hpp"

#include <cmath>
#include <numbers>

namespace xswap::cli {

std::optional<SampleConstraint> parse_constraint(std::string_view text) {
  if (text == "any") return SampleConstraint::Any;
  if (text == "separable") return SampleConstraint::Separable;
  if (text == "entangled") return SampleConstraint::Entangled;
  return std::nullopt;
}

std::string_view to_string(SampleConstraint constraint) {
  switch (constraint) {
    case SampleConstraint::Any: return "any";
    case SampleConstraint::Separable: return "separable";
    case SampleConstraint::Entangled: return "entangled";
  }
  return "?";
}

XState draw_xstate(SplitMix64& rng) {
  double d[4];
  double sum = 0.0;
  for (double& v : d) {
    v = rng.uniform();
    sum += v;
  }
  if (sum == 0.0) {  // 2^-212 event; fall back to the maximally mixed diagonal
    for (double& v : d) v = 1.0;
    sum = 4.0;
  }
  for (double& v : d) v /= sum;

  const double mod14 = rng.uniform() * std::sqrt(d[0] * d[3]);
  const double mod23 = rng.uniform() * std::sqrt(d[1] * d[2]);
  const double phase14 = 2.0 * std::numbers::pi * rng.uniform();
  const double phase23 = 2.0 * std::numbers::pi * rng.uniform();
  return {d[0], d[1], d[2], d[3], std::polar(mod14, phase14), std::polar(mod23, phase23)};
}

XState sample_xstate(SplitMix64& rng, SampleConstraint constraint) {
  for (std::size_t draw = 0; draw < kMaxDrawsPerState; ++draw) {
    const XState x = draw_xstate(rng);
    if (constraint == SampleConstraint::Any) return x;
    const bool separable = entanglement_regime(x) == EntanglementRegime::Separable;
    if (separable == (constraint == SampleConstraint::Separable)) return x;
  }
  throw SamplerExhausted("sampler: no state satisfying '" + std::string(to_string(constraint)) +
                         "' within " + std::to_string(kMaxDrawsPerState) + " draws");
}

}  // namespace xswap::cli
