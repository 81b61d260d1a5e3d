// random.hpp: seeded X-state sampler.
//
// The generator is SplitMix64:
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// and a uniform double in [0, 1) is (next() >> 11) * 2^-53. Every draw order
// below is fixed so a seed reproduces the same states on any platform.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "xswap/xstate.hpp"

namespace xswap::cli {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

enum class SampleConstraint { Any, Separable, Entangled };

std::optional<SampleConstraint> parse_constraint(std::string_view text);
std::string_view to_string(SampleConstraint constraint);

class SamplerExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxDrawsPerState = 100000;

/// One unconstrained draw: four uniforms normalised to the diagonal, then
/// |o14| ~ U[0, sqrt(d11 d44)], |o23| ~ U[0, sqrt(d22 d33)], then the two
/// phases ~ U[0, 2 pi). Eight uniforms per state.
XState draw_xstate(SplitMix64& rng);

/// Rejection-samples until `constraint` holds. Throws SamplerExhausted after
/// kMaxDrawsPerState candidates.
XState sample_xstate(SplitMix64& rng, SampleConstraint constraint = SampleConstraint::Any);

}  // namespace xswap::cli
