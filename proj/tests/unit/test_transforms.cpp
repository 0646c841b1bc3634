#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "rankone/errors.hpp"
#include "rankone/inversion.hpp"
#include "rankone/plane_function.hpp"
#include "rankone/probes.hpp"
#include "rankone/quadrature.hpp"
#include "rankone/radial_function.hpp"
#include "rankone/seminorm.hpp"
#include "rankone/spectral_function.hpp"
#include "rankone/spherical_functions.hpp"
#include "rankone/spherical_transform.hpp"
#include "test_support.hpp"

using namespace rankone;
using rankone::test::rel_err;

namespace {

const RankOneGroup kSl2 = RankOneGroup::sl2r();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

TEST_CASE("radial function presets") {
  const RadialFunction b = RadialFunction::bump(1.0, 0.5);
  CHECK(b(1.0) == doctest::Approx(1.0));
  CHECK(b(0.5) == 0.0);
  CHECK(b(1.5) == 0.0);
  CHECK(b(0.2) == 0.0);
  CHECK(b(-1.2) == b(1.2));
  CHECK(b.support() == 1.5);
  CHECK(b.inner_radius() == 0.5);
  CHECK(b.describe() == "bump:c=1,w=0.5");

  const RadialFunction g = RadialFunction::gauss(1.3);
  CHECK(std::abs(g(0.7) - std::exp(-0.49 / 1.69)) < 1e-15);
  CHECK(g(-0.7) == g(0.7));
  CHECK(g.support() == doctest::Approx(1.3 * std::sqrt(45.0)));

  CHECK(RadialFunction::zero()(0.3) == 0.0);
  CHECK(b.scaled(2.0)(1.1) == 2.0 * b(1.1));

  // Derivatives against central differences.
  const double h = 1e-5;
  for (double t : {0.8, 1.1, 1.3}) {
    CHECK(std::abs(b.derivative(t, 1) - (b(t + h) - b(t - h)) / (2.0 * h)) < 1e-6);
    CHECK(std::abs(b.derivative(t, 2) - (b(t + h) - 2.0 * b(t) + b(t - h)) / (h * h)) < 1e-3);
  }

  CHECK_THROWS_AS(RadialFunction::bump(0.3, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(RadialFunction::bump(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(RadialFunction::gauss(-1.0), std::invalid_argument);
}

TEST_CASE("sampled radial functions") {
  std::vector<double> t, v;
  for (int i = 0; i <= 40; ++i) {
    t.push_back(0.05 * i);
    v.push_back(std::cos(0.05 * i));
  }
  const RadialFunction s = RadialFunction::sampled(t, v);
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(std::abs(s(t[i]) - v[i]) < 1e-14);
  }
  CHECK(s(-0.33) == s(0.33));
  CHECK(std::abs(s(0.33) - std::cos(0.33)) < 1e-6);
  CHECK(s(2.5) == 0.0);
  CHECK(s.support() == doctest::Approx(2.0));
  CHECK_THROWS_AS(RadialFunction::sampled({0.0, 0.2, 0.1, 0.3}, {1, 1, 1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(RadialFunction::sampled({0.0, 0.1, 0.2}, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("polar transform basics") {
  CHECK(spherical_transform_polar(kSl2, RadialFunction::zero(), SpectralParameter(1.0)) ==
        cplx(0.0, 0.0));
  const RadialFunction b = RadialFunction::bump(1.0, 0.5);
  for (cplx lambda : {cplx(0.5), cplx(1.5), cplx(1.0, 0.2)}) {
    CHECK(std::abs(spherical_transform_polar(kSl2, b, SpectralParameter(lambda)) -
                   spherical_transform_polar(kSl2, b, SpectralParameter(-lambda))) <= 1e-8);
  }
  CHECK_THROWS_AS(spherical_transform_polar(kSl2, RadialFunction::gauss(1.0),
                                            SpectralParameter(cplx(0.0, 5.0))),
                  NumericalError);
}

TEST_CASE("polar transform at lambda = 0 against a Richardson-extrapolated oracle") {
  // int f Xi J dt with Xi from the Iwasawa projection, Simpson at h and h/2.
  const RadialFunction b = RadialFunction::bump(1.0, 0.5);
  auto integrand = [&](double t) { return b(t) * test::xi_iwasawa(t) * std::sinh(t); };
  const double coarse = test::simpson(integrand, 0.5, 1.5, 200);
  const double fine = test::simpson(integrand, 0.5, 1.5, 400);
  const double oracle = fine + (fine - coarse) / 15.0;
  CHECK(std::abs(spherical_transform_polar(kSl2, b, SpectralParameter(0.0)).real() - oracle) <
        1e-10);
}

TEST_CASE("horocycle and polar forms differ by one constant") {
  const RadialFunction fs[] = {RadialFunction::bump(1.0, 0.5), RadialFunction::bump(0.5, 0.3),
                               RadialFunction::gauss(1.0)};
  const std::vector<cplx> lambdas = {0.0, 0.5, 1.0, 2.5, cplx(1.0, 0.3)};
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& f : fs) {
    const std::vector<cplx> horo = spherical_transform_horocycle(kSl2, f, lambdas);
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
      const cplx ratio = horo[k] / spherical_transform_polar(kSl2, f, SpectralParameter(lambdas[k]));
      CHECK(std::abs(ratio.imag()) < 1e-8);
      lo = std::min(lo, ratio.real());
      hi = std::max(hi, ratio.real());
    }
  }
  CHECK((hi - lo) / hi <= 1e-3);
  CHECK(std::abs(hi / kTwoPi - 1.0) < 1e-8);
  const cplx real_case =
      spherical_transform_horocycle(kSl2, fs[0], SpectralParameter(1.7));
  CHECK(std::abs(real_case.imag()) <= 1e-8);
  CHECK(spherical_transform_horocycle(kSl2, RadialFunction::zero(), SpectralParameter(1.0)) ==
        cplx(0.0, 0.0));
}

TEST_CASE("Abel transform") {
  const RadialFunction b = RadialFunction::bump(1.0, 0.5);
  CHECK(abel_transform(kSl2, RadialFunction::zero(), 0.4) == 0.0);
  for (double u : {0.0, 0.3, 0.9, 1.4}) {
    CHECK(std::abs(abel_transform(kSl2, b, u) - abel_transform(kSl2, b, -u)) <= 1e-6);
  }
  // Fourier transform of the Abel image, by a separate Simpson rule in u.
  for (double lambda : {0.5, 2.0}) {
    const double fourier = 2.0 * test::simpson(
                                     [&](double u) {
                                       return std::cos(lambda * u) * abel_transform(kSl2, b, u);
                                     },
                                     0.0, 1.6, 320);
    const cplx polar = spherical_transform_polar(kSl2, b, SpectralParameter(lambda));
    CHECK(std::abs(fourier / (kTwoPi * polar.real()) - 1.0) <= 1e-3);
  }
  CHECK_THROWS_AS(abel_transform(RankOneGroup(2, 0), b, 0.0), std::invalid_argument);
}

TEST_CASE("spectral function grids and CSV") {
  const auto grid = uniform_grid(0.0, 1.0, 0.25);
  CHECK(grid.size() == 5);
  CHECK(grid.back() == 1.0);
  CHECK_THROWS_AS(uniform_grid(1.0, 0.0, 0.1), std::invalid_argument);

  const SpectralFunction F = SpectralFunction::sample(
      TubeDomain(kSl2, 1.0), {-0.5, 0.0, 0.5}, {-0.1, 0.0, 0.1},
      [](cplx z) { return std::exp(z) / 3.0; });
  CHECK(rel_err(F.value(2, 0), std::exp(cplx(-0.5, 0.1)) / 3.0) < 1e-15);
  std::ostringstream first;
  F.write_csv(first);
  std::istringstream in(first.str());
  const SpectralFunction back = SpectralFunction::read_csv(in, F.tube());
  std::ostringstream second;
  back.write_csv(second);
  CHECK(first.str() == second.str());
  CHECK(back.values() == F.values());
}

TEST_CASE("tube holomorphy defect") {
  const TubeDomain tube(kSl2, 1.0);
  const TubeGrid grid = tube_grid(tube, -2.0, 2.0);
  CHECK(grid.im.size() == 19);
  const SpectralFunction square =
      SpectralFunction::sample(tube, grid.re, grid.im, [](cplx z) { return z * z; });
  const SpectralFunction conjugate =
      SpectralFunction::sample(tube, grid.re, grid.im, [](cplx z) { return std::conj(z); });
  for (std::size_t i = 1; i + 1 < grid.im.size(); ++i) {
    for (std::size_t j = 1; j + 1 < grid.re.size(); ++j) {
      CHECK(tube_holomorphy_defect(square, i, j) <= 1e-8 * 4.0);
      CHECK(std::abs(tube_holomorphy_defect(conjugate, i, j) - 2.0) < 1e-9);
    }
  }
  CHECK_THROWS_AS(tube_holomorphy_defect(square, 0, 3), std::invalid_argument);
}

TEST_CASE("transform of a bump on the p = 1 tube") {
  const TubeDomain tube = TubeDomain::for_schwartz_exponent(kSl2, 1.0);
  const TubeGrid grid = tube_grid(tube, -3.0, 3.0);
  const SpectralFunction F =
      sample_transform(kSl2, RadialFunction::bump(1.0, 0.5), tube, grid.re, grid.im);
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < F.rows(); ++i) {
    for (std::size_t j = 1; j + 1 < F.cols(); ++j) {
      worst = std::max(worst, tube_holomorphy_defect(F, i, j));
    }
  }
  CHECK(worst <= 1e-4);
  // The second-order stencil is noticeably worse on the same grid.
  CHECK(tube_holomorphy_defect(F, 5, 5, StencilOrder::second) >
        tube_holomorphy_defect(F, 5, 5, StencilOrder::fourth));
}

TEST_CASE("weighted decay on the real axis") {
  const RadialFunction b = RadialFunction::bump(1.0, 0.5);
  double near = 0.0;
  double far = 0.0;
  for (double lambda = 0.0; lambda <= 40.0; lambda += 0.25) {
    const double w = std::abs(spherical_transform_polar(kSl2, b, SpectralParameter(lambda))) *
                     (1.0 + lambda) * (1.0 + lambda);
    double& slot = lambda <= 20.0 ? near : far;
    slot = std::max(slot, w);
  }
  CHECK(far <= near);
}

TEST_CASE("Plancherel calibration") {
  const PlancherelCalibration cal = plancherel_calibration(kSl2);
  CHECK(std::abs(cal.constant * std::numbers::pi - 1.0) < 1e-4);
  CHECK(cal.residual < 1e-4);
  // 1/|c|^2 against the closed-form c-function.
  for (double lambda : {0.3, 1.0, 4.0}) {
    CHECK(rel_err(plancherel_density(kSl2, lambda),
                  1.0 / std::norm(c_function_closed_form(kSl2, SpectralParameter(lambda)))) <
          1e-7);
  }
}

TEST_CASE("wave-packet inversion") {
  const std::vector<double> ts = uniform_grid(0.0, 3.0, 0.1);
  const SpectralFunction zero(TubeDomain(), uniform_grid(0.0, 10.0, 0.05), {0.0},
                              std::vector<cplx>(201));
  for (const cplx v : inverse_transform(kSl2, zero, ts)) {
    CHECK(v == cplx(0.0, 0.0));
  }

  const RadialFunction b = RadialFunction::bump(1.0, 0.5);
  const std::vector<cplx> back =
      inverse_transform(kSl2, transform_on_axis(kSl2, b, decay_cutoff(kSl2, b)), ts);
  double sup = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    sup = std::max(sup, std::abs(back[i] - b(ts[i])));
  }
  CHECK(sup <= 1e-3);

  CHECK_THROWS_AS(wave_packet(kSl2, transform_on_axis(kSl2, b, 5.0), ts), NumericalError);
  const SpectralFunction uneven(TubeDomain(), {0.0, 0.1, 0.3, 0.4, 0.5}, {0.0},
                                std::vector<cplx>(5));
  CHECK_THROWS_AS(wave_packet(kSl2, uneven, ts), std::invalid_argument);
}

TEST_CASE("Schwartz seminorms") {
  CHECK(seminorm_mu_p(kSl2, RadialFunction::zero(), 2.0, 0, 0) == 0.0);
  const RadialFunction g = RadialFunction::gauss(1.0);
  double oracle = 0.0;
  for (int k = 0; k <= 800; ++k) {
    const double t = 0.05 * k;
    if (t > g.support()) {
      break;
    }
    oracle = std::max(oracle, std::exp(-t * t) / test::xi_iwasawa(t));
  }
  CHECK(std::abs(seminorm_mu_p(kSl2, g, 2.0, 0, 0) - oracle) < 1e-9 * oracle);

  std::vector<double> t, v;
  for (int i = 0; i <= 90; ++i) {
    t.push_back(0.5 * i);
    v.push_back(std::exp(-0.1 * 0.5 * i));
  }
  const RadialFunction slow = RadialFunction::sampled(t, v);
  CHECK(std::isinf(seminorm_mu_p(kSl2, slow, 1.0, 0, 0)));
  CHECK(std::isfinite(seminorm_mu_p(kSl2, RadialFunction::bump(1.0, 0.5), 1.0, 3, 2)));
  CHECK_THROWS_AS(seminorm_mu_p(kSl2, g, 0.0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(seminorm_mu_p(kSl2, g, 2.0, 0, 3), std::invalid_argument);
}

TEST_CASE("symmetric transform") {
  const RadialFunction profile = RadialFunction::bump(0.6, 0.4);
  const PlaneFunction zero([](cplx) { return 0.0; }, cplx(0.0, 1.0), 1.0);
  CHECK(symmetric_transform(kSl2, zero, 0.3, SpectralParameter(1.0)) == cplx(0.0, 0.0));

  const PlaneFunction centred = PlaneFunction::radial_about(cplx(0.0, 1.0), profile);
  const cplx polar = spherical_transform_polar(kSl2, profile, SpectralParameter(1.0));
  for (double angle : {0.0, 0.7, 2.1}) {
    const cplx v = symmetric_transform(kSl2, centred, angle, SpectralParameter(1.0));
    CHECK(std::abs(v / (kTwoPi * polar) - 1.0) < 1e-6);
  }

  const std::vector<double> angles = {0.0, 0.4, 0.8, 1.2, 1.6, 2.0, 2.4, 2.8};
  const PlaneFunction displaced = PlaneFunction::radial_about(cplx(0.4, 1.3), profile);
  CHECK(k_independence_probe(kSl2, centred, angles, SpectralParameter(1.0)).variation <= 1e-6);
  CHECK(k_independence_probe(kSl2, displaced, angles, SpectralParameter(1.0)).variation > 1e-3);
  CHECK(k_independence_probe(kSl2, displaced.k_averaged(), angles, SpectralParameter(1.0))
            .variation <= 1e-6);
}

TEST_CASE("regularized H xi_1 sweeps") {
  const Hxi1Sweep real = hxi1_regularized(kSl2, SpectralParameter(1.0), {5.0, 10.0, 20.0});
  REQUIRE(real.values.size() == 3);
  CHECK(std::isfinite(std::abs(real.values[0].identity_slice)));
  CHECK(real.monotone_growth);
  CHECK_FALSE(real.stabilized);

  // lambda = i rho: phi is identically 1 and the exponent vanishes, so the
  // box integral is its area 4 U^2.
  const Hxi1Sweep flat = hxi1_regularized(kSl2, SpectralParameter(cplx(0.0, 0.5)), {5.0, 10.0, 20.0});
  for (const auto& v : flat.values) {
    CHECK(rel_err(v.value, 4.0 * v.u_max * v.u_max) < 1e-9);
    CHECK(rel_err(v.identity_slice, 2.0 * v.u_max) < 1e-9);
  }
  CHECK_FALSE(flat.stabilized);
  CHECK_THROWS_AS(hxi1_regularized(kSl2, SpectralParameter(1.0), {-1.0}), std::invalid_argument);
}

TEST_CASE("decomposition probe") {
  const RadialFunction b = RadialFunction::bump(1.0, 0.5);
  const std::vector<double> lambdas = {0.5, 1.5};
  const DecompositionReport plain = decomposition_probe(
      kSl2, {[&](double, double t, double) { return b(t); }, b.support()}, lambdas);
  for (const auto& row : plain.rows) {
    CHECK(std::abs(row.ratio - 1.0) <= 1e-6);
    CHECK(rel_err(row.h_f, spherical_transform_polar(kSl2, b, SpectralParameter(row.lambda))) <
          1e-10);
  }
  const DecompositionReport modulated = decomposition_probe(
      kSl2, {[&](double a, double t, double) { return b(t) * std::cos(a); }, b.support()},
      lambdas);
  CHECK(modulated.rows.size() == 2);
  CHECK(modulated.max_abs_h_f < 1e-12);
  CHECK(std::isnan(modulated.rows[0].ratio.real()));
}
