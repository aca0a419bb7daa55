#pragma once

namespace burgers {

/// A point on the real line in space and non-negative time.
struct EvalPoint {
  double x = 0.0;
  double t = 0.0;
};

/// Throws DomainError when t < 0 or a coordinate is not finite.
void validate(const EvalPoint& p);

}  // namespace burgers
