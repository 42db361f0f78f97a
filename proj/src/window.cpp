#include "trigshear/window.hpp"

#include <cmath>

#include "trigshear/errors.hpp"

namespace trigshear {
namespace {

// Largest exponent exp() can take before the result is subnormal; beyond it
// we return exactly 0 instead of relying on gradual underflow.
constexpr double kExpCutoff = 745.0;

double mollifier_unchecked(double b, double x) {
  if (!(x > 0.0)) return 0.0;
  const double t = b / (x * x);
  if (!(t < kExpCutoff)) return 0.0;
  return std::exp(-t);
}

// s(x) = r(2/3 + x) r(2/3 - x), supported in (-4/3, 4/3).
double bump(double b, double x) {
  const double third2 = 2.0 / 3.0;
  return mollifier_unchecked(b, third2 + x) * mollifier_unchecked(b, third2 - x);
}

}  // namespace

double mollifier(double b, double x) {
  if (!std::isfinite(b) || b <= 0.0) {
    throw InvalidParameter("mollifier: b must be finite and > 0");
  }
  if (!std::isfinite(x)) {
    throw InvalidParameter("mollifier: x must be finite");
  }
  return mollifier_unchecked(b, x);
}

Window1D make_exp_window(double b) {
  if (!std::isfinite(b) || b <= 0.0) {
    throw InvalidParameter("make_exp_window: b must be finite and > 0");
  }
  auto eval = [b](double x) -> double {
    if (!std::isfinite(x)) {
      throw InvalidParameter("Window1D: x must be finite");
    }
    const double num = bump(b, x);
    if (num == 0.0) return 0.0;
    // The denominator is 1-periodic; reduce x to [-1/2, 1/2] so that the
    // shifts {-2,...,2} capture every nonzero term of the periodization.
    const double xr = x - std::nearbyint(x);
    double den = 0.0;
    for (int k = -2; k <= 2; ++k) den += bump(b, xr + k);
    return num / den;
  };
  return Window1D(std::move(eval), SmoothnessOrder::infinite(), b);
}

double eval_gtilde(const Window1D& g, double x) {
  return g(0.5 * x) - g(x);
}

}  // namespace trigshear
