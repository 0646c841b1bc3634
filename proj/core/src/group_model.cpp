#include "rankone/group_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rankone/errors.hpp"
#include "rankone/quadrature.hpp"
#include "rankone/spherical_functions.hpp"

namespace rankone {

RankOneGroup::RankOneGroup(int p, int q, Realization realization)
    : p_(p), q_(q), realization_(realization) {
  if (p < 0 || q < 0 || p + q < 1) {
    throw std::invalid_argument("RankOneGroup: need p, q >= 0 and p + q >= 1");
  }
  if (realization == Realization::sl2r && (p != 1 || q != 0)) {
    throw std::invalid_argument("RankOneGroup: the sl2r realization requires (p, q) = (1, 0)");
  }
}

void RankOneGroup::require_sl2r(const char* operation) const {
  if (!is_sl2r()) {
    throw std::invalid_argument(std::string(operation) + " requires the sl2r realization");
  }
}

std::string RankOneGroup::describe() const {
  return "(p=" + std::to_string(p_) + ", q=" + std::to_string(q_) +
         (is_sl2r() ? ", sl2r)" : ")");
}

SpectralParameter SpectralParameter::canonical() const {
  if (lambda_.real() < 0.0 || (lambda_.real() == 0.0 && lambda_.imag() < 0.0)) {
    return SpectralParameter(-lambda_);
  }
  return *this;
}

TubeDomain::TubeDomain(const RankOneGroup& group, double eps)
    : epsilon(eps), half_width(eps * group.rho()) {
  if (!(eps >= 0.0)) {
    throw std::invalid_argument("TubeDomain: epsilon must be non-negative");
  }
}

TubeDomain TubeDomain::for_schwartz_exponent(const RankOneGroup& group, double p) {
  if (!(p > 0.0 && p <= 2.0)) {
    throw std::invalid_argument("TubeDomain: Schwartz exponent p must lie in (0, 2]");
  }
  return TubeDomain(group, 2.0 / p - 1.0);
}

GroupElement::GroupElement() : m_{1.0, 0.0, 0.0, 1.0} {}

GroupElement::GroupElement(const std::array<double, 4>& row_major) : m_(row_major) {
  if (std::abs(determinant() - 1.0) > 1e-10) {
    throw std::invalid_argument("GroupElement: determinant must be 1");
  }
  renormalize();
}

GroupElement GroupElement::rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return GroupElement({c, -s, s, c}, Unchecked{});
}

GroupElement GroupElement::diagonal(double t) {
  return GroupElement({std::exp(0.5 * t), 0.0, 0.0, std::exp(-0.5 * t)}, Unchecked{});
}

GroupElement GroupElement::unipotent(double x) {
  return GroupElement({1.0, x, 0.0, 1.0}, Unchecked{});
}

GroupElement GroupElement::polar(double theta1, double t, double theta2) {
  return rotation(theta1) * diagonal(t) * rotation(theta2);
}

GroupElement GroupElement::inverse() const {
  return GroupElement({m_[3], -m_[1], -m_[2], m_[0]}, Unchecked{});
}

cplx GroupElement::act(cplx z) const {
  return (m_[0] * z + m_[1]) / (m_[2] * z + m_[3]);
}

void GroupElement::renormalize() {
  const double det = determinant();
  if (std::abs(det - 1.0) > 1e-14) {
    const double scale = 1.0 / std::sqrt(det);
    for (double& entry : m_) {
      entry *= scale;
    }
  }
}

GroupElement operator*(const GroupElement& lhs, const GroupElement& rhs) {
  const auto& a = lhs.m_;
  const auto& b = rhs.m_;
  GroupElement product({a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                        a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]},
                       GroupElement::Unchecked{});
  product.renormalize();
  return product;
}

double jacobian(const RankOneGroup& group, double t) {
  if (t < 0.0) {
    throw std::invalid_argument("jacobian: t must be non-negative");
  }
  double value = 1.0;
  if (group.p() > 0) {
    value *= std::pow(std::sinh(t), group.p());
  }
  if (group.q() > 0) {
    value *= std::pow(std::sinh(2.0 * t), group.q());
  }
  return value;
}

double radial_from_cosh_minus_one(double cosh_minus_one) {
  if (cosh_minus_one <= 0.0) {
    return 0.0;
  }
  // cosh t - 1 = 2 sinh^2(t/2)
  return 2.0 * std::asinh(std::sqrt(0.5 * cosh_minus_one));
}

double radial_part(const GroupElement& g) {
  const auto& m = g.entries();
  const double frobenius2 = m[0] * m[0] + m[1] * m[1] + m[2] * m[2] + m[3] * m[3];
  if (std::abs(g.determinant() - 1.0) > 1e-8 || frobenius2 < 2.0 - 1e-10) {
    throw std::invalid_argument("radial_part: input is not unimodular");
  }
  const double diff = m[0] - m[3];
  const double sum = m[1] + m[2];
  return radial_from_cosh_minus_one(0.5 * (diff * diff + sum * sum));
}

double hyperbolic_distance(cplx z, cplx w) {
  if (z.imag() <= 0.0 || w.imag() <= 0.0) {
    throw std::invalid_argument("hyperbolic_distance: points must lie in the upper half-plane");
  }
  return radial_from_cosh_minus_one(std::norm(z - w) / (2.0 * z.imag() * w.imag()));
}

double xi(const RankOneGroup& group, double t) {
  return phi(group, SpectralParameter(0.0), std::abs(t)).real();
}

double sigma(const RankOneGroup& /*group*/, double t) { return std::abs(t); }

QuadratureResult integrate_radial_detailed(const RankOneGroup& group,
                                           const std::function<double(double)>& f,
                                           double t_max, double tol) {
  if (!(t_max > 0.0) || !(tol > 0.0)) {
    throw std::invalid_argument("integrate_radial: t_max and tol must be positive");
  }
  constexpr double kPanel = 0.25;
  auto integrand = [&](double t) { return f(t) * jacobian(group, t); };
  const double coarse = quad::integrate_panels(integrand, 0.0, t_max, kPanel);
  const double fine = quad::integrate_panels(integrand, 0.0, t_max, 0.5 * kPanel);
  const double tail = quad::integrate_panels(integrand, t_max, t_max + kPanel, kPanel);
  if (!std::isfinite(fine) || std::abs(tail) > tol) {
    throw NumericalError("integrate_radial: tail beyond t_max = " + std::to_string(t_max) +
                         " exceeds tolerance; increase t_max");
  }
  return {fine, std::abs(fine - coarse), std::abs(tail)};
}

double integrate_radial(const RankOneGroup& group, const std::function<double(double)>& f,
                        double t_max, double tol) {
  return integrate_radial_detailed(group, f, t_max, tol).value;
}

}  // namespace rankone
