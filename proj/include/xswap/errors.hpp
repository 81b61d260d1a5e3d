#pragma once

#include <stdexcept>
#include <string>

namespace xswap {

/// A state violates normalization, positivity or hermiticity.
class InvalidStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A 4x4 matrix has entries outside the X pattern. `defect` is the largest
/// off-pattern modulus.
class NonXStateError : public std::invalid_argument {
 public:
  NonXStateError(const std::string& what, double defect)
      : std::invalid_argument(what), defect_(defect) {}
  double defect() const noexcept { return defect_; }

 private:
  double defect_;
};

}  // namespace xswap
