#include "rankone/spherical_transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rankone/errors.hpp"
#include "rankone/parallel.hpp"
#include "rankone/quadrature.hpp"
#include "rankone/spherical_functions.hpp"

namespace rankone {
namespace {

constexpr double kPolarPanel = 0.25;
constexpr double kPolarPhase = 16.0;  // max |Re lambda| * panel width

constexpr double kUMax = 30.0;
constexpr double kXMax = 50.0;
constexpr double kAbelPanel = 0.125;
constexpr double kHorocyclePhase = 8.0;
constexpr double kAbelTailTol = 1e-10;

constexpr int kPsiNodes = 256;
constexpr double kSymmetricPanel = 0.125;

// int_R f(t(u, y)) dy with cosh t - 1 = 2 sinh^2(u/2) + y^2/2, for u >= 0.
double abel_inner(const RadialFunction& f, double u) {
  const double outer = f.support();
  const double inner = f.inner_radius();
  const double su = std::sinh(0.5 * u);
  const double so = std::sinh(0.5 * outer);
  if (u >= outer) {
    return 0.0;
  }
  // cosh T - cosh u = 2 (sinh^2(T/2) - sinh^2(u/2))
  const double y_hi = 2.0 * std::sqrt(so * so - su * su);
  double y_lo = 0.0;
  if (u < inner) {
    const double si = std::sinh(0.5 * inner);
    y_lo = 2.0 * std::sqrt(si * si - su * su);
  }
  const double v_lo = std::asinh(y_lo);
  const double v_cap = std::asinh(kXMax * std::exp(0.5 * u));
  const double v_hi = std::min(std::asinh(y_hi), v_cap);
  const double base = 2.0 * su * su;
  auto integrand = [&](double v) {
    const double y = std::sinh(v);
    return f(radial_from_cosh_minus_one(base + 0.5 * y * y)) * std::cosh(v);
  };
  const double body = quad::integrate_panels(integrand, v_lo, v_hi, kAbelPanel);
  if (v_hi < std::asinh(y_hi)) {
    const double tail = quad::integrate_panels(integrand, v_hi, v_hi + kAbelPanel, kAbelPanel);
    if (std::abs(tail) > kAbelTailTol) {
      throw NumericalError("abel_transform: integrand beyond |x| = 50 exceeds tolerance");
    }
  }
  return 2.0 * body;
}

void require_u_truncation(const RadialFunction& f) {
  if (f.support() > kUMax) {
    throw NumericalError("horocycle integral: support " + std::to_string(f.support()) +
                         " exceeds the truncation |u| <= 30");
  }
}

}  // namespace

cplx spherical_transform_polar(const RankOneGroup& group, const RadialFunction& f,
                               SpectralParameter lambda, const TransformOptions& options) {
  if (f.amplitude() == 0.0) {
    return {0.0, 0.0};
  }
  const SphericalFunction phi_lambda(group, lambda.weyl_reflected());
  const double lo = f.inner_radius();
  const double hi = f.support();
  const double frequency = std::abs(lambda.value().real());
  const double panel = frequency > 0.0 ? std::min(kPolarPanel, kPolarPhase / frequency)
                                       : kPolarPanel;
  const double edge = std::abs(f(hi) * phi_lambda(hi)) * jacobian(group, hi);
  if (!(edge <= options.tail_tol)) {
    throw NumericalError("spherical_transform_polar: integrand at the truncation t = " +
                         std::to_string(hi) + " is " + std::to_string(edge) +
                         "; lambda lies outside the tube of f");
  }
  return quad::integrate_panels(
      [&](double t) { return f(t) * jacobian(group, t) * phi_lambda(t); }, lo, hi, panel);
}

SpectralFunction sample_transform(const RankOneGroup& group, const RadialFunction& f,
                                  const TubeDomain& tube, std::vector<double> re,
                                  std::vector<double> im, const TransformOptions& options) {
  return SpectralFunction::sample(tube, std::move(re), std::move(im), [&](cplx lambda) {
    return spherical_transform_polar(group, f, SpectralParameter(lambda), options);
  });
}

double abel_transform(const RankOneGroup& group, const RadialFunction& f, double u) {
  group.require_sl2r("abel_transform");
  require_u_truncation(f);
  if (f.amplitude() == 0.0) {
    return 0.0;
  }
  // e^{rho u} dx = e^{(rho - 1/2) u} dy, and rho = 1/2.
  return abel_inner(f, std::abs(u));
}

std::vector<cplx> spherical_transform_horocycle(const RankOneGroup& group,
                                                const RadialFunction& f,
                                                const std::vector<cplx>& lambdas) {
  group.require_sl2r("spherical_transform_horocycle");
  require_u_truncation(f);
  std::vector<cplx> result(lambdas.size());
  if (f.amplitude() == 0.0 || lambdas.empty()) {
    return result;
  }
  double frequency = 0.0;
  for (const cplx& lambda : lambdas) {
    frequency = std::max(frequency, std::abs(lambda.real()));
  }
  const double panel = frequency > 0.0 ? std::min(kAbelPanel, kHorocyclePhase / frequency)
                                       : kAbelPanel;
  const double hi = f.support();
  const auto& rule = quad::gauss_legendre(32);
  const int panels = std::max(1, static_cast<int>(std::ceil(hi / panel - 1e-9)));
  const double width = hi / panels;
  const std::size_t order = rule.nodes.size();
  std::vector<double> u(panels * order);
  std::vector<double> weight(panels * order);
  for (int p = 0; p < panels; ++p) {
    for (std::size_t i = 0; i < order; ++i) {
      u[p * order + i] = (p + 0.5) * width + 0.5 * width * rule.nodes[i];
      weight[p * order + i] = 0.5 * width * rule.weights[i];
    }
  }
  std::vector<double> abel(u.size());
  parallel_for(u.size(), [&](std::size_t k) { abel[k] = abel_inner(f, u[k]); });
  // The Abel image is even: int_{-T}^{T} e^{i lambda u} A(u) du = 2 int_0^T cos(lambda u) A(u) du.
  for (std::size_t l = 0; l < lambdas.size(); ++l) {
    cplx total{};
    for (std::size_t p = 0; p < static_cast<std::size_t>(panels); ++p) {
      cplx panel_sum{};
      for (std::size_t i = 0; i < order; ++i) {
        const std::size_t k = p * order + i;
        panel_sum += weight[k] * std::cos(lambdas[l] * u[k]) * abel[k];
      }
      total += panel_sum;
    }
    result[l] = 2.0 * total;
  }
  return result;
}

cplx spherical_transform_horocycle(const RankOneGroup& group, const RadialFunction& f,
                                   SpectralParameter lambda) {
  return spherical_transform_horocycle(group, f, std::vector<cplx>{lambda.value()}).front();
}

cplx symmetric_transform(const RankOneGroup& group, const PlaneFunction& f, double k_angle,
                         SpectralParameter lambda) {
  group.require_sl2r("symmetric_transform");
  const cplx c = f.center();
  const double sy = std::sqrt(c.imag());
  const GroupElement to_center({sy, c.real() / sy, 0.0, 1.0 / sy});
  const GroupElement pulled = GroupElement::rotation(-k_angle) * to_center;
  const cplx exponent = group.rho() + cplx(0.0, 1.0) * lambda.value();
  const double two_pi = 2.0 * std::numbers::pi;
  auto ring = [&](double r) -> cplx {
    if (r == 0.0) {
      return {0.0, 0.0};
    }
    const cplx z0{0.0, std::exp(r)};
    const cplx mean = quad::periodic_mean(
        [&](double psi) -> cplx {
          const cplx z = GroupElement::rotation(0.5 * psi).act(z0);
          const double value = f(to_center.act(z));
          if (value == 0.0) {
            return {0.0, 0.0};
          }
          return value * std::exp(exponent * std::log(pulled.act(z).imag()));
        },
        kPsiNodes);
    return two_pi * std::sinh(r) * mean;
  };
  return quad::integrate_panels(ring, 0.0, f.radius(), kSymmetricPanel);
}

}  // namespace rankone
