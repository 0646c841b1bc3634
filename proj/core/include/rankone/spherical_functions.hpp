#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "rankone/group_model.hpp"

namespace rankone {

/// Value with first and second t-derivatives.
struct Jet {
  cplx value;
  cplx d1;
  cplx d2;
};

/// Formal solution e^{(s - rho) t} (1 + sum_{k >= 1} a_k e^{-k t}) of the
/// radial equation, in the ODE exponent variable s = i lambda.
///
/// Only even k carry nonzero coefficients because coth and tanh expand in
/// powers of e^{-2t}. c_plus/c_minus are left at zero by hc_series_coeffs and
/// filled in by callers that attach amplitudes.
struct HCSeries {
  cplx s;
  std::vector<cplx> coeffs;  // coeffs[k] = a_k, coeffs[0] = 1
  cplx c_plus;
  cplx c_minus;
};

/// Coefficients a_0..a_{k_max}. Substituting the series into
///   f'' + ((p+q) coth t + q tanh t) f' = (s^2 - rho^2) f
/// with coth t = 1 + 2 sum_j e^{-2jt} and tanh t = 1 + 2 sum_j (-1)^j e^{-2jt}
/// gives
///   k (k - 2s) a_k = - sum_{j >= 1} A_j (s - rho - k + 2j) a_{k-2j},
///   A_j = 2 (p + q + (-1)^j q).
/// Throws NumericalError when k - 2s vanishes for some even k <= k_max.
HCSeries hc_series_coeffs(const RankOneGroup& group, cplx s, int k_max);

/// Partial sum of the series (all stored coefficients) and its derivatives.
Jet hc_series_jet(const RankOneGroup& group, const HCSeries& series, double t);

/// ODE residual of the partial sum at t > 0.
cplx hc_series_residual(const RankOneGroup& group, const HCSeries& series, double t);

/// Elementary spherical function phi_lambda(a_t) for one (group, lambda).
///
/// phi_lambda(a_t) = F(a, b; c; -sinh^2 t), a = (rho + i lambda)/2,
/// b = (rho - i lambda)/2, c = (p + q + 1)/2. For |lambda| > 4 and
/// |lambda| t > 8 the hypergeometric series suffers cancellation; there the
/// value is c(lambda) Phi(s, t) + c(-lambda) Phi(-s, t) with the
/// Harish-Chandra series and the Gamma-product c-function.
///
/// lambda is replaced by its canonical Weyl representative, so
/// phi_lambda and phi_{-lambda} are bitwise identical. Immutable after
/// construction and safe to share between threads.
class SphericalFunction {
 public:
  SphericalFunction(const RankOneGroup& group, SpectralParameter lambda);

  const RankOneGroup& group() const { return group_; }
  SpectralParameter lambda() const { return lambda_; }

  cplx operator()(double t) const;
  Jet jet(double t) const;

 private:
  bool uses_series(double t) const;
  Jet series_jet(double t) const;

  RankOneGroup group_;
  SpectralParameter lambda_;
  cplx a_;
  cplx b_;
  double c_;
  bool series_enabled_ = false;
  double series_t_min_ = 0.0;
  HCSeries plus_;
  HCSeries minus_;
};

cplx phi(const RankOneGroup& group, SpectralParameter lambda, double t);
Jet phi_jet(const RankOneGroup& group, SpectralParameter lambda, double t);

/// [f'' + ((p+q) coth t + q tanh t) f'](t) + (lambda^2 + rho^2) f(t).
/// Zero exactly when f satisfies the radial Casimir equation at eigenvalue
/// -(lambda^2 + rho^2). Throws std::invalid_argument for t <= 0.
cplx casimir_residual(const RankOneGroup& group, SpectralParameter lambda,
                      const std::function<Jet(double)>& f, double t);

/// Gamma-product form of the c-function read off from the connection
/// formula of F at infinity:
///   c(lambda) = 2^{rho - i lambda} Gamma(c) Gamma(i lambda)
///               / (Gamma((rho + i lambda)/2) Gamma((p+2)/4 + i lambda/2)).
cplx c_function_closed_form(const RankOneGroup& group, SpectralParameter lambda);

struct CFunctionFit {
  cplx c_plus;   // c(lambda)
  cplx c_minus;  // c(-lambda)
  double t1 = 0.0;
  double t2 = 0.0;
  double condition = 0.0;
};

/// Solves phi(t_i) = c(lambda) Phi(s, t_i) + c(-lambda) Phi(-s, t_i) at
/// t1 = 4 and t2 = 8, Phi with 24 series terms. When the equilibrated 2x2
/// system has condition above 1e3 at t2 = 8, t2 moves to the best point on a
/// 0.25 grid in [5, 8]. Throws std::invalid_argument for lambda = 0 and
/// NumericalError when the condition number exceeds 1e8 or lambda is
/// resonant.
CFunctionFit fit_c_function(const RankOneGroup& group, SpectralParameter lambda);

cplx c_function(const RankOneGroup& group, SpectralParameter lambda);

/// |(1/2pi) int_0^{2pi} phi(radial_part(a_s k_theta a_t)) dtheta
///   - phi(a_s) phi(a_t)| with an n-point periodic trapezoid rule.
double functional_equation_defect(const RankOneGroup& group, SpectralParameter lambda,
                                  double s, double t, int k_nodes = 256);

}  // namespace rankone
