#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "rankone/group_model.hpp"

namespace rankone::test {

inline double rel_err(cplx got, cplx want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Xi(a_t) on SL(2,R) straight from the Iwasawa projection:
// a_t k_theta e1 = (e^{t/2} cos, e^{-t/2} sin), so e^{H} = e^t cos^2 + e^{-t} sin^2
// and Xi = mean over theta of e^{-H/2}. Trapezoid on a periodic integrand;
// the peak near theta = pi/2 has width e^{-t}, hence the large n.
inline double xi_iwasawa(double t, int n = 65536) {
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double th = 2.0 * std::numbers::pi * k / n;
    const double c = std::cos(th);
    const double s = std::sin(th);
    sum += 1.0 / std::sqrt(std::exp(t) * c * c + std::exp(-t) * s * s);
  }
  return sum / n;
}

// Composite Simpson on [a, b] with n (even) intervals.
template <class F>
auto simpson(F&& f, double a, double b, int n) {
  const double h = (b - a) / n;
  auto total = f(a) + f(b);
  for (int i = 1; i < n; ++i) {
    total += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  }
  return total * (h / 3.0);
}

struct HypRef {
  cplx a;
  cplx b;
  double c;
  double z;
  cplx value;
};

struct PhiRef {
  int p;
  int q;
  cplx lambda;
  double t;
  cplx value;
};

struct CRef {
  int p;
  int q;
  cplx lambda;
  cplx value;
};

#include "reference_values.inc"

}  // namespace rankone::test
