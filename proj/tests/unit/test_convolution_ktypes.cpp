#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "rankone/convolution.hpp"
#include "rankone/polar_samples.hpp"
#include "rankone/radial_function.hpp"
#include "rankone/spherical_functions.hpp"
#include "rankone/spherical_transform.hpp"
#include "test_support.hpp"

using namespace rankone;
using rankone::test::rel_err;

namespace {

const RankOneGroup kSl2 = RankOneGroup::sl2r();
const RadialFunction kF = RadialFunction::bump(0.0, 0.6);
const RadialFunction kG = RadialFunction::bump(0.5, 0.3);
const RadialFunction kH = RadialFunction::bump(0.0, 0.4);

// Mixed K-types in both angles.
cplx mixed(double a, double t, double b) {
  return kG(t) * (1.0 + std::cos(a) + 0.5 * std::sin(2.0 * b) + std::cos(a - 3.0 * b));
}

}  // namespace

TEST_CASE("convolution of zero") {
  CHECK(convolve_oracle(kSl2, RadialFunction::zero(), kG, 0.7) == 0.0);
  CHECK(convolve_oracle(kSl2, kF, RadialFunction::zero(), 0.7) == 0.0);
}

TEST_CASE("convolution at the identity is int f g J") {
  const double oracle =
      test::simpson([](double s) { return kF(s) * kG(s) * std::sinh(s); }, 0.0, 0.8, 800);
  CHECK(rel_err(convolve_oracle(kSl2, kF, kG, 0.0), oracle) < 1e-8);
}

TEST_CASE("convolution support and commutativity") {
  CHECK(convolve_oracle(kSl2, kF, kG, 1.45) == 0.0);
  for (double t : {0.0, 0.3, 0.8, 1.2}) {
    const double fg = convolve_oracle(kSl2, kF, kG, t);
    const double gf = convolve_oracle(kSl2, kG, kF, t);
    CHECK(std::abs(fg - gf) <= 1e-6 * std::max(1e-3, std::abs(fg)));
  }
  const std::vector<double> ts = {0.1, 0.5, 0.9};
  const std::vector<double> batch = sample_convolution(kSl2, kF, kG, ts);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    CHECK(batch[i] == convolve_oracle(kSl2, kF, kG, ts[i]));
  }
  // Gaussians count as compact (cut at e^{-45}); long sampled tails do not.
  CHECK(convolve_oracle(kSl2, RadialFunction::gauss(0.3), kG, 0.2) > 0.0);
  std::vector<double> t, v;
  for (int i = 0; i <= 40; ++i) {
    t.push_back(i);
    v.push_back(std::exp(-i));
  }
  CHECK_THROWS_AS(convolve_oracle(kSl2, RadialFunction::sampled(t, v), kG, 0.2),
                  std::invalid_argument);
}

TEST_CASE("convolution is associative") {
  const RadialFunction fg = convolution_function(kSl2, kF, kG);
  const RadialFunction gh = convolution_function(kSl2, kG, kH);
  for (double t : {0.5, 1.5}) {
    const double left = convolve_oracle(kSl2, fg, kH, t);
    const double right = convolve_oracle(kSl2, kF, gh, t);
    CHECK(std::abs(left - right) <= 1e-4 * std::abs(left));
  }
}

TEST_CASE("spherical transform is multiplicative") {
  const RadialFunction fg = convolution_function(kSl2, kF, kG);
  const std::vector<double> re = {0.5, 1.0, 2.0};
  const SpectralFunction product = convolve_spectral(kSl2, kF, kG, re);
  for (std::size_t j = 0; j < re.size(); ++j) {
    const cplx hf = spherical_transform_polar(kSl2, kF, SpectralParameter(re[j]));
    const cplx hg = spherical_transform_polar(kSl2, kG, SpectralParameter(re[j]));
    CHECK(rel_err(product.value(0, j), hf * hg) < 1e-14);
    CHECK(rel_err(spherical_transform_polar(kSl2, fg, SpectralParameter(re[j])), hf * hg) < 1e-4);
  }
  // H(f * f) = (Hf)^2 is real and nonnegative on the tempered axis.
  const SpectralFunction square = convolve_spectral(kSl2, kF, kF, uniform_grid(0.0, 6.0, 0.5));
  for (const cplx v : square.values()) {
    CHECK(v.real() >= 0.0);
    CHECK(std::abs(v.imag()) < 1e-12);
  }
}

TEST_CASE("sphericalization") {
  const PolarSamples plain = PolarSamples::sample([](double, double t, double) { return kG(t); },
                                                  2.0, 0.05, 32);
  CHECK(sphericalize_samples(plain).max_difference(plain) < 1e-15);

  const PolarSamples f = PolarSamples::sample(mixed, 2.0, 0.05, 32);
  const PolarSamples once = sphericalize_samples(f);
  CHECK(sphericalize_samples(once).max_difference(once) <= 1e-10);
  // The mean of mixed over both angles is kG(t).
  CHECK(once.max_difference(plain) < 1e-13);

  const PolarSamples modulated =
      PolarSamples::sample([](double a, double t, double) { return kG(t) * std::cos(a); }, 2.0,
                           0.05, 32);
  CHECK(sphericalize_samples(modulated).max_abs() < 1e-15);

  const RadialFunction r = sphericalize(kSl2, f);
  CHECK(std::abs(r(0.5) - kG(0.5)) < 1e-13);
  CHECK_THROWS_AS(sphericalize(RankOneGroup(2, 0), f), std::invalid_argument);
}

TEST_CASE("K-type projections") {
  const PolarSamples f = PolarSamples::sample(mixed, 1.5, 0.05, 32);
  const PolarSamples both = ktype_project(kSl2, ktype_project(kSl2, f, {0}, Side::left), {0},
                                          Side::right);
  CHECK(both.max_difference(sphericalize_samples(f)) <= 1e-10);

  for (Side side : {Side::left, Side::right}) {
    for (int n = -2; n <= 2; ++n) {
      const PolarSamples p = ktype_project(kSl2, f, {n}, side);
      CHECK(ktype_project(kSl2, p, {n}, side).max_difference(p) <= 1e-10);
      for (int m = -2; m <= 2; ++m) {
        if (m != n) {
          CHECK(ktype_project(kSl2, p, {m}, side).max_abs() <= 1e-10);
        }
      }
    }
  }

  // e^{-i theta1} is its own left n = 1 component.
  const PolarSamples e1 = PolarSamples::sample(
      [](double a, double t, double) { return kG(t) * std::polar(1.0, -a); }, 1.5, 0.05, 32);
  CHECK(ktype_project(kSl2, e1, {1}, Side::left).max_difference(e1) < 1e-13);
  CHECK(ktype_project(kSl2, e1, {-1}, Side::left).max_abs() < 1e-13);

  // Left-only samples are constant in theta2.
  const PolarSamples left = PolarSamples::sample_left(
      [](double a, double t) { return kG(t) * std::cos(a); }, 1.5, 0.05, 32);
  CHECK(ktype_project(kSl2, left, {0}, Side::right).max_difference(left) == 0.0);
  CHECK(ktype_project(kSl2, left, {2}, Side::right).max_abs() == 0.0);
  CHECK_THROWS_AS(ktype_project(RankOneGroup(2, 0), f, {0}, Side::left), std::invalid_argument);
}

TEST_CASE("polar samples CSV round trip") {
  const PolarSamples real = PolarSamples::sample(
      [](double a, double t, double b) { return kG(t) * std::cos(a + b); }, 1.0, 0.1, 8);
  std::ostringstream out;
  real.write_csv(out);
  CHECK(out.str().rfind("theta1,t,theta2,value\n", 0) == 0);
  std::istringstream in(out.str());
  CHECK(PolarSamples::read_csv(in).max_difference(real) == 0.0);

  const PolarSamples complex_left = PolarSamples::sample_left(
      [](double a, double t) { return kG(t) * std::polar(1.0, a); }, 1.0, 0.1, 8);
  std::ostringstream out2;
  complex_left.write_csv(out2);
  CHECK(out2.str().rfind("theta1,t,value,im_value\n", 0) == 0);
  std::istringstream in2(out2.str());
  const PolarSamples back = PolarSamples::read_csv(in2);
  CHECK(back.left_only());
  CHECK(back.max_difference(complex_left) == 0.0);

  std::istringstream bad("theta1,t,theta2,value\n0,0,0\n");
  CHECK_THROWS_AS(PolarSamples::read_csv(bad), std::invalid_argument);
}

TEST_CASE("f * phi_lambda is proportional to phi_lambda") {
  const SpectralParameter L(0.8);
  CHECK(spherical_convolution_g(kSl2, RadialFunction::zero(), L, 1.0) == cplx(0.0, 0.0));
  const cplx hf = spherical_transform_polar(kSl2, kF, L.weyl_reflected());
  for (double t : {0.5, 1.0, 2.0}) {
    const cplx g = spherical_convolution_g(kSl2, kF, L, t);
    CHECK(std::abs(g - hf * phi(kSl2, L, t)) <= 1e-5 * std::abs(hf));
  }
  const std::function<Jet(double)> jet = [&](double t) {
    return spherical_convolution_jet(kSl2, kF, L, t);
  };
  for (double t = 0.5; t <= 3.0 + 1e-9; t += 0.25) {
    CHECK(std::abs(casimir_residual(kSl2, L, jet, t)) <= 1e-4 * std::abs(hf) * (0.64 + 0.25));
  }
  CHECK_THROWS_AS(spherical_convolution_jet(kSl2, kF, L, 1.0, 0.0), std::invalid_argument);
}
