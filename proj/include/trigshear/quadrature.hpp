#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace trigshear {

/// Adaptive interval subdivision on top of a fixed-order Simpson panel.
struct QuadratureSpec {
  double abs_tol = 1e-10;
  int max_subdivisions = 48;  // maximum recursion depth per interval
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
  std::int64_t evaluations = 0;
};

namespace detail {

template <class F>
void simpson_recurse(const F& f, double a, double b, double fa, double fm,
                     double fb, double whole, double tol, int depth,
                     QuadratureResult& out) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  out.evaluations += 2;
  const double h = b - a;
  const double left = (h / 12.0) * (fa + 4.0 * flm + fm);
  const double right = (h / 12.0) * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol || depth <= 0) {
    out.value += left + right + delta / 15.0;
    out.error_estimate += std::abs(delta) / 15.0;
    if (depth <= 0 && std::abs(delta) > 15.0 * tol) out.converged = false;
    return;
  }
  simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, out);
  simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, out);
}

}  // namespace detail

/// Integrates f over [a, b]. The reported error estimate is below
/// spec.abs_tol whenever converged is true.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b,
                                    const QuadratureSpec& spec = {}) {
  QuadratureResult out;
  if (a == b) return out;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  out.evaluations = 3;
  const double whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
  detail::simpson_recurse(f, a, b, fa, fm, fb, whole, spec.abs_tol,
                          spec.max_subdivisions, out);
  return out;
}

}  // namespace trigshear
