#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace kirchhoff {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Thrown when a caller hands us data that violates a documented precondition
// (bad sizes, out-of-range parameters, malformed files).  The CLI maps this
// to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when an algorithm fails to reach its stated accuracy (bracketing
// failure, non-convergence, degenerate geometry discovered mid-computation).
// The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kirchhoff
