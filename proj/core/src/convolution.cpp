#include "rankone/convolution.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rankone/parallel.hpp"
#include "rankone/quadrature.hpp"
#include "rankone/spherical_transform.hpp"

namespace rankone {
namespace {

constexpr int kThetaPanels = 8;
constexpr double kSPanel = 0.125;

void require_compact(const RadialFunction& f, const char* operation) {
  if (f.kind() == RadialFunction::Kind::sampled && f.support() > 30.0) {
    throw std::invalid_argument(std::string(operation) + ": f must be compactly supported");
  }
}

// (2/pi) int_0^{pi/2} h(radial_part(a_s k_theta a_t)) dtheta, the K-mean.
template <class H>
auto k_mean(double s, double t, H&& h) {
  const GroupElement left = GroupElement::diagonal(s);
  const GroupElement right = GroupElement::diagonal(t);
  const double quarter = 0.5 * std::numbers::pi;
  auto integrand = [&](double theta) {
    return h(radial_part(left * GroupElement::rotation(theta) * right));
  };
  return quad::integrate_panels(integrand, 0.0, quarter, quarter / kThetaPanels) / quarter;
}

template <class H>
auto radial_convolution(const RankOneGroup& group, const RadialFunction& f, double t, H&& h) {
  return quad::integrate_panels(
      [&](double s) {
        const double weight = f(s) * jacobian(group, s);
        return weight * k_mean(s, t, h);
      },
      f.inner_radius(), f.support(), kSPanel);
}

}  // namespace

double convolve_oracle(const RankOneGroup& group, const RadialFunction& f,
                       const RadialFunction& g, double t) {
  group.require_sl2r("convolve_oracle");
  require_compact(f, "convolve_oracle");
  if (f.amplitude() == 0.0 || g.amplitude() == 0.0) {
    return 0.0;
  }
  return radial_convolution(group, f, std::abs(t), [&](double r) { return g(r); });
}

std::vector<double> sample_convolution(const RankOneGroup& group, const RadialFunction& f,
                                       const RadialFunction& g, const std::vector<double>& ts) {
  std::vector<double> values(ts.size());
  parallel_for(ts.size(), [&](std::size_t i) { values[i] = convolve_oracle(group, f, g, ts[i]); });
  return values;
}

RadialFunction convolution_function(const RankOneGroup& group, const RadialFunction& f,
                                    const RadialFunction& g, double dt) {
  std::vector<double> ts = uniform_grid(0.0, f.support() + g.support() + dt, dt);
  std::vector<double> values = sample_convolution(group, f, g, ts);
  return RadialFunction::sampled(std::move(ts), std::move(values));
}

SpectralFunction convolve_spectral(const RankOneGroup& group, const RadialFunction& f,
                                   const RadialFunction& g, std::vector<double> re) {
  const TubeDomain axis(group, 0.0);
  return sample_transform(group, f, axis, re, {0.0}) * sample_transform(group, g, axis, re, {0.0});
}

cplx spherical_convolution_g(const RankOneGroup& group, const RadialFunction& f,
                             SpectralParameter lambda, double t) {
  group.require_sl2r("spherical_convolution_g");
  require_compact(f, "spherical_convolution_g");
  if (f.amplitude() == 0.0) {
    return {0.0, 0.0};
  }
  const SphericalFunction phi_lambda(group, lambda);
  return radial_convolution(group, f, std::abs(t), [&](double r) { return phi_lambda(r); });
}

Jet spherical_convolution_jet(const RankOneGroup& group, const RadialFunction& f,
                              SpectralParameter lambda, double t, double h) {
  if (!(h > 0.0) || t - h < 0.0) {
    throw std::invalid_argument("spherical_convolution_jet: need h > 0 and t >= h");
  }
  const cplx minus = spherical_convolution_g(group, f, lambda, t - h);
  const cplx centre = spherical_convolution_g(group, f, lambda, t);
  const cplx plus = spherical_convolution_g(group, f, lambda, t + h);
  return {centre, (plus - minus) / (2.0 * h), (plus - 2.0 * centre + minus) / (h * h)};
}

}  // namespace rankone
