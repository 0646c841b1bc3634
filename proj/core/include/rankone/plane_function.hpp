#pragma once

#include <complex>
#include <functional>

#include "rankone/radial_function.hpp"

namespace rankone {

using cplx = std::complex<double>;

/// Function on G/K, given on the upper half-plane as a function of g.i.
///
/// The function must vanish outside the hyperbolic disc of `radius()`
/// around `center()`; quadratures over the plane rely on that disc.
class PlaneFunction {
 public:
  PlaneFunction(std::function<double(cplx)> fn, cplx center, double radius);

  /// z -> profile(d(z, center)).
  static PlaneFunction radial_about(cplx center, const RadialFunction& profile);

  double operator()(cplx z) const { return fn_(z); }
  cplx center() const { return center_; }
  double radius() const { return radius_; }

  /// K-average about i, f#(z) = (1/2pi) int f(k_theta z) d theta, tabulated
  /// on a radial grid (step dr) with an n_theta-point trapezoid rule and
  /// returned as a function radial about i.
  PlaneFunction k_averaged(int n_theta = 256, double dr = 0.01) const;

 private:
  std::function<double(cplx)> fn_;
  cplx center_;
  double radius_;
};

}  // namespace rankone
