#pragma once

#include <cmath>
#include <complex>

namespace trigshear {

/// Neumaier-compensated accumulator.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }

  double get() const { return sum + carry; }
};

struct KahanComplex {
  KahanSum re, im;

  void add(const std::complex<double>& z) {
    re.add(z.real());
    im.add(z.imag());
  }

  std::complex<double> get() const { return {re.get(), im.get()}; }
};

}  // namespace trigshear
