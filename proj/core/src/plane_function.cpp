#include "rankone/plane_function.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rankone/group_model.hpp"
#include "rankone/quadrature.hpp"

namespace rankone {

PlaneFunction::PlaneFunction(std::function<double(cplx)> fn, cplx center, double radius)
    : fn_(std::move(fn)), center_(center), radius_(radius) {
  if (!(center.imag() > 0.0) || !(radius > 0.0)) {
    throw std::invalid_argument("PlaneFunction: center must lie in the upper half-plane");
  }
}

PlaneFunction PlaneFunction::radial_about(cplx center, const RadialFunction& profile) {
  return PlaneFunction(
      [center, profile](cplx z) { return profile(hyperbolic_distance(z, center)); }, center,
      profile.support());
}

PlaneFunction PlaneFunction::k_averaged(int n_theta, double dr) const {
  const cplx origin{0.0, 1.0};
  const double reach = hyperbolic_distance(center_, origin) + radius_;
  std::vector<double> r;
  std::vector<double> mean;
  const int count = static_cast<int>(std::ceil(reach / dr)) + 2;
  for (int k = 0; k <= count; ++k) {
    const double rk = k * dr;
    const cplx z{0.0, std::exp(rk)};
    r.push_back(rk);
    mean.push_back(quad::periodic_mean(
        [&](double theta) { return fn_(GroupElement::rotation(0.5 * theta).act(z)); }, n_theta));
  }
  return radial_about(origin, RadialFunction::sampled(std::move(r), std::move(mean)));
}

}  // namespace rankone
