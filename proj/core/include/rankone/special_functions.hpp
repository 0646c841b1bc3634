#pragma once

#include <complex>

namespace rankone {

using cplx = std::complex<double>;

/// Parameters of the Gauss hypergeometric function F(a, b; c; z).
///
/// c must not be zero or a negative integer. Every call made while
/// evaluating spherical functions has z = -sinh(t)^2 <= 0; the general entry
/// point accepts z <= 0.5.
struct HypergeomParams {
  cplx a;
  cplx b;
  cplx c;
  double z = 0.0;
};

/// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
cplx pochhammer(cplx a, int k);

/// log Gamma(z) on the principal sheet up to multiples of 2*pi*i in the
/// imaginary part (only exp() of sums of these is ever used).
cplx log_gamma(cplx z);

/// 1/Gamma(z); exactly zero at the poles z = 0, -1, -2, ...
cplx reciprocal_gamma(cplx z);

/// True when z lies within `tol` of a non-positive integer.
bool is_nonpositive_integer(cplx z, double tol = 1e-13);

/// Analytic continuation of the Gauss series to z <= 0.5.
///
/// Evaluation regions:
///   |z| <= 0.5          direct series,
///   -2 <= z < -0.5      Pfaff transformation w = z/(z-1) in [1/3, 2/3],
///   z < -2              connection formula in 1/z; when a - b is within
///                       0.02 of an integer the value is taken as the mean
///                       over a small circle in the a-plane (F is entire in a).
///
/// Series are summed until two consecutive terms fall below 1e-16 of the
/// running sum, with a hard cap of 10000 terms.
///
/// Throws std::invalid_argument when c is a non-positive integer or
/// z > 0.5, and NumericalError when a series hits the iteration cap.
cplx gauss_2f1(const HypergeomParams& params);

/// Direct summation of the defining series; requires |z| < 1.
cplx gauss_2f1_series(const HypergeomParams& params);

/// Pfaff transformation F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)),
/// valid for every z <= 0 (the transformed argument lies in [0, 1)).
cplx gauss_2f1_pfaff(const HypergeomParams& params);

/// Connection formula around z = infinity; requires z < -1 and a - b not an
/// integer.
cplx gauss_2f1_reciprocal(const HypergeomParams& params);

}  // namespace rankone
