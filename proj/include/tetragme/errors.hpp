#pragma once

#include <stdexcept>
#include <string>

namespace tetragme {

/// Base triangle too flat to carry a circumradius. Carries the smallest
/// triangle-inequality slack so callers can see how degenerate the input was.
class DegenerateBaseError : public std::runtime_error {
public:
  DegenerateBaseError(const std::string& what, double offending_slack)
      : std::runtime_error(what), offending_slack_(offending_slack) {}
  double offending_slack() const { return offending_slack_; }

private:
  double offending_slack_;
};

/// Edge lengths that no tetrahedron in R^3 can realize (Cayley-Menger
/// determinant or Gram radicand below -1e-9).
class InfeasibleEdgesError : public std::runtime_error {
public:
  InfeasibleEdgesError(const std::string& what, double value)
      : std::runtime_error(what), value_(value) {}
  double value() const { return value_; }

private:
  double value_;
};

}  // namespace tetragme
