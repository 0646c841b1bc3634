#pragma once

#include <vector>

#include "rankone/group_model.hpp"
#include "rankone/radial_function.hpp"
#include "rankone/spectral_function.hpp"
#include "rankone/spherical_functions.hpp"

namespace rankone {

/// (f * g)(a_t) = int_0^inf f(s) J(s) (1/2pi) int_0^{2pi} g(radial_part(a_s k_theta a_t)) dtheta ds
/// for K-biinvariant f, g on SL(2,R).
///
/// The theta integral is reduced to [0, pi/2] (the radial part depends on
/// theta through cos 2 theta) and done with 8 Gauss-Legendre panels of 32
/// points; s runs over the support of f in panels of width 0.125.
double convolve_oracle(const RankOneGroup& group, const RadialFunction& f,
                       const RadialFunction& g, double t);

/// convolve_oracle at every t (parallel).
std::vector<double> sample_convolution(const RankOneGroup& group, const RadialFunction& f,
                                       const RadialFunction& g, const std::vector<double>& ts);

/// f * g tabulated on [0, supp f + supp g] with step dt, as a sampled
/// RadialFunction.
RadialFunction convolution_function(const RankOneGroup& group, const RadialFunction& f,
                                    const RadialFunction& g, double dt = 0.02);

/// Hf . Hg on the real-axis grid `re`.
SpectralFunction convolve_spectral(const RankOneGroup& group, const RadialFunction& f,
                                   const RadialFunction& g, std::vector<double> re);

/// g_{lambda}(t) = (f * phi_lambda)(a_t), same quadrature as convolve_oracle
/// (sl2r, f compactly supported).
cplx spherical_convolution_g(const RankOneGroup& group, const RadialFunction& f,
                             SpectralParameter lambda, double t);

/// Value and central-difference derivatives (step h) of
/// spherical_convolution_g, for casimir_residual.
Jet spherical_convolution_jet(const RankOneGroup& group, const RadialFunction& f,
                              SpectralParameter lambda, double t, double h = 1e-3);

}  // namespace rankone
