#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qfib {

// Domain error carrying a stable machine-readable kind tag next to the
// human message. Kinds in use: NonHomogeneous, UnknownVariable, SyntaxError,
// NotCubic, PlaneNotContained, NotGenericallyRegular, ZeroPoint, DOutOfRange,
// ZeroInput, ZeroPolynomial, NotSingularHere, DimensionMismatch,
// UnsupportedRank, NotSymmetric, NotOnBranchCurve, NotSingular, NotA1,
// IllConditioned, ConfigError.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

}  // namespace qfib
