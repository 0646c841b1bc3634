#include "rankone/spherical_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "rankone/errors.hpp"
#include "rankone/quadrature.hpp"
#include "rankone/special_functions.hpp"

namespace rankone {
namespace {

constexpr cplx kI{0.0, 1.0};

// Above these thresholds the Harish-Chandra series replaces the
// hypergeometric series (whose partial sums cancel like e^{|lambda| t}).
constexpr double kSeriesMinModulus = 4.0;
constexpr double kSeriesMinProduct = 8.0;

constexpr int kFitTerms = 24;
constexpr double kFitT1 = 4.0;
constexpr double kFitT2 = 8.0;
constexpr double kFitSoftCondition = 1e3;
constexpr double kFitMaxCondition = 1e8;

Jet sum_series(const RankOneGroup& group, const HCSeries& series, double t, bool early_stop) {
  const double rho = group.rho();
  const cplx base = std::exp((series.s - rho) * t);
  const double ratio = std::exp(-2.0 * t);
  cplx value{};
  cplx d1{};
  cplx d2{};
  double power = 1.0;
  int small_in_a_row = 0;
  bool converged = !early_stop;
  for (std::size_t k = 0; k < series.coeffs.size(); k += 2) {
    const cplx mu = series.s - rho - static_cast<double>(k);
    const cplx term = series.coeffs[k] * power;
    value += term;
    d1 += term * mu;
    d2 += term * mu * mu;
    if (early_stop) {
      const double size = std::abs(term) * (1.0 + std::norm(mu));
      if (size <= 1e-17 * (std::abs(value) + std::abs(d1) + std::abs(d2))) {
        if (++small_in_a_row == 2) {
          converged = true;
          break;
        }
      } else {
        small_in_a_row = 0;
      }
    }
    power *= ratio;
    if (power == 0.0) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw NumericalError("Harish-Chandra series did not converge at t = " + std::to_string(t));
  }
  return {base * value, base * d1, base * d2};
}

bool near_nonzero_integer(cplx s, double gap) {
  const double nearest = std::round(s.real());
  return nearest != 0.0 && std::abs(s - nearest) < gap;
}

// Smallest singular value ratio of a 2x2 complex matrix.
double condition_2x2(cplx m11, cplx m12, cplx m21, cplx m22) {
  const double frob2 = std::norm(m11) + std::norm(m12) + std::norm(m21) + std::norm(m22);
  const double det = std::abs(m11 * m22 - m12 * m21);
  const double disc = std::sqrt(std::max(0.0, frob2 * frob2 - 4.0 * det * det));
  const double smax2 = 0.5 * (frob2 + disc);
  const double smin2 = 0.5 * (frob2 - disc);
  if (smin2 <= 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return std::sqrt(smax2 / smin2);
}

double equilibrated_condition(cplx m11, cplx m12, cplx m21, cplx m22) {
  const double col1 = std::max(std::abs(m11), std::abs(m21));
  const double col2 = std::max(std::abs(m12), std::abs(m22));
  if (col1 == 0.0 || col2 == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  m11 /= col1;
  m21 /= col1;
  m12 /= col2;
  m22 /= col2;
  const double row1 = std::hypot(std::abs(m11), std::abs(m12));
  const double row2 = std::hypot(std::abs(m21), std::abs(m22));
  return condition_2x2(m11 / row1, m12 / row1, m21 / row2, m22 / row2);
}

}  // namespace

HCSeries hc_series_coeffs(const RankOneGroup& group, cplx s, int k_max) {
  if (k_max < 0) {
    throw std::invalid_argument("hc_series_coeffs: k_max must be non-negative");
  }
  const double rho = group.rho();
  const double a_odd = 2.0 * group.p();                  // A_j, j odd
  const double a_even = 2.0 * (group.p() + 2 * group.q());  // A_j, j even
  HCSeries series{s, std::vector<cplx>(static_cast<std::size_t>(k_max) + 1), {}, {}};
  series.coeffs[0] = 1.0;
  // Running sums of b_M = (s - rho - 2M) a_{2M}, split by the parity of M.
  cplx sum_by_parity[2] = {{0.0, 0.0}, {0.0, 0.0}};
  for (int half = 1; 2 * half <= k_max; ++half) {
    const int prev = half - 1;
    sum_by_parity[prev % 2] += (s - rho - 2.0 * prev) * series.coeffs[2 * prev];
    // j = half - M is odd exactly when M and half have different parity.
    const cplx rhs = a_odd * sum_by_parity[(half + 1) % 2] + a_even * sum_by_parity[half % 2];
    const double k = 2.0 * half;
    const cplx denom = k * (k - 2.0 * s);
    if (std::abs(k - 2.0 * s) < 1e-9 * k) {
      throw NumericalError("hc_series_coeffs: resonant exponent (k = 2s for k = " +
                           std::to_string(2 * half) + ")");
    }
    series.coeffs[2 * half] = -rhs / denom;
  }
  return series;
}

Jet hc_series_jet(const RankOneGroup& group, const HCSeries& series, double t) {
  return sum_series(group, series, t, false);
}

cplx hc_series_residual(const RankOneGroup& group, const HCSeries& series, double t) {
  if (!(t > 0.0)) {
    throw std::invalid_argument("hc_series_residual: t must be positive");
  }
  const Jet jet = hc_series_jet(group, series, t);
  const double rho = group.rho();
  const double drift = (group.p() + group.q()) / std::tanh(t) + group.q() * std::tanh(t);
  return jet.d2 + drift * jet.d1 - (series.s * series.s - rho * rho) * jet.value;
}

cplx c_function_closed_form(const RankOneGroup& group, SpectralParameter lambda) {
  const cplx il = kI * lambda.value();
  if (is_nonpositive_integer(il, 1e-12)) {
    throw std::invalid_argument("c_function_closed_form: pole at i lambda = 0, -1, -2, ...");
  }
  const double rho = group.rho();
  const double c = 0.5 * (group.p() + group.q() + 1);
  const cplx x = 0.5 * (rho + il);
  const cplx y = 0.25 * (group.p() + 2.0) + 0.5 * il;
  if (is_nonpositive_integer(x) || is_nonpositive_integer(y)) {
    return {0.0, 0.0};
  }
  const cplx log_value = (rho - il) * std::log(2.0) + log_gamma(c) + log_gamma(il) -
                         log_gamma(x) - log_gamma(y);
  return std::exp(log_value);
}

SphericalFunction::SphericalFunction(const RankOneGroup& group, SpectralParameter lambda)
    : group_(group), lambda_(lambda.canonical()) {
  const double rho = group.rho();
  const cplx il = kI * lambda_.value();
  a_ = 0.5 * (rho + il);
  b_ = 0.5 * (rho - il);
  c_ = 0.5 * (group.p() + group.q() + 1);

  const double modulus = std::abs(lambda_.value());
  if (modulus > kSeriesMinModulus && !near_nonzero_integer(il, 0.05)) {
    series_enabled_ = true;
    series_t_min_ = kSeriesMinProduct / modulus;
    const int half_terms = static_cast<int>(std::ceil(46.0 / (2.0 * series_t_min_))) + 8;
    plus_ = hc_series_coeffs(group, il, 2 * half_terms);
    minus_ = hc_series_coeffs(group, -il, 2 * half_terms);
    plus_.c_plus = c_function_closed_form(group, lambda_);
    minus_.c_plus = c_function_closed_form(group, lambda_.weyl_reflected());
    plus_.c_minus = minus_.c_plus;
    minus_.c_minus = plus_.c_plus;
  }
}

bool SphericalFunction::uses_series(double t) const {
  return series_enabled_ && t >= series_t_min_;
}

Jet SphericalFunction::series_jet(double t) const {
  const Jet plus = sum_series(group_, plus_, t, true);
  const Jet minus = sum_series(group_, minus_, t, true);
  const cplx cp = plus_.c_plus;
  const cplx cm = plus_.c_minus;
  return {cp * plus.value + cm * minus.value, cp * plus.d1 + cm * minus.d1,
          cp * plus.d2 + cm * minus.d2};
}

cplx SphericalFunction::operator()(double t) const {
  t = std::abs(t);
  if (t == 0.0) {
    return {1.0, 0.0};
  }
  if (uses_series(t)) {
    return series_jet(t).value;
  }
  const double sh = std::sinh(t);
  return gauss_2f1({a_, b_, c_, -sh * sh});
}

Jet SphericalFunction::jet(double t) const {
  const double sign = t < 0.0 ? -1.0 : 1.0;
  t = std::abs(t);
  Jet result;
  if (uses_series(t)) {
    result = series_jet(t);
  } else {
    const double sh = std::sinh(t);
    const double z = -sh * sh;
    const double dz = -std::sinh(2.0 * t);
    const double d2z = -2.0 * std::cosh(2.0 * t);
    const cplx f0 = gauss_2f1({a_, b_, c_, z});
    const cplx f1 = a_ * b_ / c_ * gauss_2f1({a_ + 1.0, b_ + 1.0, c_ + 1.0, z});
    const cplx f2 = a_ * (a_ + 1.0) * b_ * (b_ + 1.0) / (c_ * (c_ + 1.0)) *
                    gauss_2f1({a_ + 2.0, b_ + 2.0, c_ + 2.0, z});
    result = {f0, f1 * dz, f2 * dz * dz + f1 * d2z};
  }
  result.d1 *= sign;
  return result;
}

cplx phi(const RankOneGroup& group, SpectralParameter lambda, double t) {
  return SphericalFunction(group, lambda)(t);
}

Jet phi_jet(const RankOneGroup& group, SpectralParameter lambda, double t) {
  return SphericalFunction(group, lambda).jet(t);
}

cplx casimir_residual(const RankOneGroup& group, SpectralParameter lambda,
                      const std::function<Jet(double)>& f, double t) {
  if (!(t > 0.0)) {
    throw std::invalid_argument("casimir_residual: t must be positive (coth is singular at 0)");
  }
  const Jet jet = f(t);
  const double rho = group.rho();
  const cplx lam = lambda.value();
  const double drift = (group.p() + group.q()) / std::tanh(t) + group.q() * std::tanh(t);
  return jet.d2 + drift * jet.d1 + (lam * lam + rho * rho) * jet.value;
}

CFunctionFit fit_c_function(const RankOneGroup& group, SpectralParameter lambda) {
  if (std::abs(lambda.value()) < 1e-12) {
    throw std::invalid_argument("c_function: lambda = 0 is outside the domain");
  }
  const cplx s = kI * lambda.value();
  const HCSeries plus = hc_series_coeffs(group, s, kFitTerms);
  const HCSeries minus = hc_series_coeffs(group, -s, kFitTerms);
  const SphericalFunction spherical(group, lambda);

  auto column = [&](double t) {
    return std::pair{hc_series_jet(group, plus, t).value, hc_series_jet(group, minus, t).value};
  };
  const auto [p1, m1] = column(kFitT1);

  double best_t2 = kFitT2;
  auto [p2, m2] = column(kFitT2);
  double best_condition = equilibrated_condition(p1, m1, p2, m2);
  if (best_condition > kFitSoftCondition) {
    for (double t2 = kFitT2 - 0.25; t2 >= 5.0 - 1e-12; t2 -= 0.25) {
      const auto [cp2, cm2] = column(t2);
      const double condition = equilibrated_condition(p1, m1, cp2, cm2);
      if (condition < best_condition) {
        best_condition = condition;
        best_t2 = t2;
        p2 = cp2;
        m2 = cm2;
      }
    }
  }
  if (!(best_condition <= kFitMaxCondition)) {
    throw NumericalError("c_function: ill-conditioned fit (condition " +
                         std::to_string(best_condition) + "); lambda is near-resonant");
  }
  const cplx phi1 = spherical(kFitT1);
  const cplx phi2 = spherical(best_t2);
  const cplx det = p1 * m2 - m1 * p2;
  return {(phi1 * m2 - m1 * phi2) / det, (p1 * phi2 - phi1 * p2) / det, kFitT1, best_t2,
          best_condition};
}

cplx c_function(const RankOneGroup& group, SpectralParameter lambda) {
  return fit_c_function(group, lambda).c_plus;
}

double functional_equation_defect(const RankOneGroup& group, SpectralParameter lambda,
                                  double s, double t, int k_nodes) {
  group.require_sl2r("functional_equation_defect");
  if (k_nodes < 1) {
    throw std::invalid_argument("functional_equation_defect: need at least one K node");
  }
  const SphericalFunction spherical(group, lambda);
  const GroupElement left = GroupElement::diagonal(s);
  const GroupElement right = GroupElement::diagonal(t);
  const cplx average = quad::periodic_mean(
      [&](double theta) {
        return spherical(radial_part(left * GroupElement::rotation(theta) * right));
      },
      k_nodes);
  return std::abs(average - spherical(s) * spherical(t));
}

}  // namespace rankone
