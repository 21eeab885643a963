#pragma once

#include "relipoly/exact.hpp"

#include <functional>
#include <vector>

namespace relipoly {

/// A bracketed root of a sign change on (0, 1).
struct SignChange {
  double lo;
  double hi;
  double x_star;  // bracket midpoint, or the exact zero when one was hit
  double width() const { return hi - lo; }
};

/// Sign (-1, 0, +1) of a function at an exact rational point.
using ExactSign = std::function<int(const Rational&)>;

/// Sign changes on (0, 1): the sign is sampled at x = i / samples for
/// i = 0..samples, each change is bisected at dyadic points to width <= tol.
/// Touching zeros without a sign change are not reported; a function that is
/// identically zero has none.
std::vector<SignChange> find_sign_changes(const ExactSign& sign, double tol = 1e-9, int samples = 1024);

/// Sign of a power-basis polynomial at p/q, computed on integers as
/// sum c_k p^k q^(d-k).
int power_sign(const std::vector<BigInt>& coefficients, const Rational& x);

}  // namespace relipoly
