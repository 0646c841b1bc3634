#pragma once

#include <vector>

#include "rankone/group_model.hpp"
#include "rankone/plane_function.hpp"
#include "rankone/radial_function.hpp"
#include "rankone/spectral_function.hpp"

namespace rankone {

struct TransformOptions {
  /// Largest admissible |f phi_lambda J| at the truncation point of f.
  double tail_tol = 1e-10;
};

/// Hf(lambda) = int_0^inf f(t) phi_{-lambda}(t) J(t) dt.
///
/// Composite 32-point Gauss-Legendre over the support of f, with panels no
/// wider than min(0.25, 16/|Re lambda|). Throws NumericalError when the
/// integrand is not negligible where f is truncated (lambda outside the tube
/// on which f's transform exists).
cplx spherical_transform_polar(const RankOneGroup& group, const RadialFunction& f,
                               SpectralParameter lambda, const TransformOptions& options = {});

/// Polar transform on a grid (parallel over nodes).
SpectralFunction sample_transform(const RankOneGroup& group, const RadialFunction& f,
                                  const TubeDomain& tube, std::vector<double> re,
                                  std::vector<double> im, const TransformOptions& options = {});

/// Abel transform A f(u) = e^{rho u} int_R f(radial_part(a_u n_x)) dx (sl2r).
///
/// With y = e^{u/2} x the radial part satisfies
///   cosh t - 1 = 2 sinh^2(u/2) + y^2/2,
/// and the y integral is done in y = sinh(v). The truncations are
/// |u| <= 30 and |x| <= 50; a nonzero integrand one panel past |x| = 50
/// raises NumericalError.
double abel_transform(const RankOneGroup& group, const RadialFunction& f, double u);

/// int int f(radial_part(a_u n_x)) e^{(i lambda + rho) u} du dx (sl2r).
/// Equals the one-dimensional Fourier transform of the Abel transform, which
/// is even in u.
cplx spherical_transform_horocycle(const RankOneGroup& group, const RadialFunction& f,
                                   SpectralParameter lambda);
std::vector<cplx> spherical_transform_horocycle(const RankOneGroup& group,
                                                const RadialFunction& f,
                                                const std::vector<cplx>& lambdas);

/// H(f)(kM : lambda) = int_{AN} f(k a_u n_x . i) e^{(i lambda + rho) u} du dx
/// for f on the upper half-plane (sl2r). With z = k^{-1} w this is
///   int f(w) Im(k^{-1} w)^{rho + i lambda} dA(w),
/// evaluated in geodesic polar coordinates about the center of f's disc.
/// `k_angle` is the angle theta of k = k_theta.
cplx symmetric_transform(const RankOneGroup& group, const PlaneFunction& f, double k_angle,
                         SpectralParameter lambda);

}  // namespace rankone
