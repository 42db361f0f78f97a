#pragma once

#include <functional>
#include <utility>

namespace trigshear {

/// Declared smoothness class of a window function. The exponential family is
/// C^inf; a negative value encodes that. Callers use this as metadata when
/// picking decay expectations, no derivatives are ever formed.
struct SmoothnessOrder {
  int value = -1;

  static SmoothnessOrder infinite() { return {-1}; }
  static SmoothnessOrder finite(int q) { return {q}; }
  bool is_infinite() const { return value < 0; }
};

/// exp(-b/x^2) for x > 0, 0 for x <= 0. Underflow near x = 0+ is clamped to
/// exactly 0 before the exponential can produce inf/NaN intermediates.
double mollifier(double b, double x);

/// One-dimensional window g: even, supported in (-2/3, 2/3), g == 1 on
/// [-1/3, 1/3], integer translates summing to 1. Immutable; evaluation is
/// pure and thread safe.
class Window1D {
 public:
  Window1D(std::function<double(double)> evaluator, SmoothnessOrder order,
           double family_b = 0.0)
      : eval_(std::move(evaluator)), order_(order), family_b_(family_b) {}

  double operator()(double x) const { return eval_(x); }

  SmoothnessOrder smoothness() const { return order_; }

  /// Shape parameter of the exponential family; 0 when not applicable.
  double family_b() const { return family_b_; }

 private:
  std::function<double(double)> eval_;
  SmoothnessOrder order_;
  double family_b_;
};

/// g_b(x) = s(x) / sum_k s(x+k) with s(x) = r(2/3+x) r(2/3-x) built from the
/// mollifier. The periodization is evaluated with x reduced mod 1, where the
/// shifts k in {-2,...,2} cover every nonzero term.
Window1D make_exp_window(double b);

/// gtilde(x) = g(x/2) - g(x); supported in {1/3 < |x| < 4/3}.
double eval_gtilde(const Window1D& g, double x);

}  // namespace trigshear
