#include "rankone/special_functions.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_gamma.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rankone/errors.hpp"

namespace rankone {
namespace {

constexpr int kMaxTerms = 10000;
constexpr double kTermTolerance = 1e-16;

// Circle-mean fallback for the connection formula near integer a - b.
constexpr double kIntegerGap = 0.02;
constexpr double kCircleRadius = 0.06;
constexpr int kCirclePoints = 64;

void ensure_gsl_quiet() {
  // GSL's default handler aborts; every status is checked below instead.
  static const bool once = [] {
    gsl_set_error_handler_off();
    return true;
  }();
  (void)once;
}

void validate_c(cplx c) {
  if (is_nonpositive_integer(c, 1e-12)) {
    throw std::invalid_argument("gauss_2f1: c must not be zero or a negative integer");
  }
}

double distance_to_integer(cplx x) {
  return std::abs(x - std::round(x.real()));
}

}  // namespace

cplx pochhammer(cplx a, int k) {
  if (k < 0) {
    throw std::invalid_argument("pochhammer: k must be non-negative");
  }
  cplx product{1.0, 0.0};
  for (int j = 0; j < k; ++j) {
    product *= a + static_cast<double>(j);
  }
  return product;
}

bool is_nonpositive_integer(cplx z, double tol) {
  if (std::abs(z.imag()) > tol || z.real() > tol) {
    return false;
  }
  return std::abs(z.real() - std::round(z.real())) <= tol;
}

cplx log_gamma(cplx z) {
  ensure_gsl_quiet();
  if (is_nonpositive_integer(z)) {
    throw std::invalid_argument("log_gamma: pole at non-positive integer");
  }
  gsl_sf_result modulus;
  gsl_sf_result phase;
  const int status = gsl_sf_lngamma_complex_e(z.real(), z.imag(), &modulus, &phase);
  if (status != GSL_SUCCESS) {
    throw NumericalError(std::string("log_gamma: ") + gsl_strerror(status));
  }
  return {modulus.val, phase.val};
}

cplx reciprocal_gamma(cplx z) {
  if (is_nonpositive_integer(z)) {
    return {0.0, 0.0};
  }
  return std::exp(-log_gamma(z));
}

cplx gauss_2f1_series(const HypergeomParams& params) {
  const auto& [a, b, c, z] = params;
  validate_c(c);
  if (std::abs(z) >= 1.0) {
    throw std::invalid_argument("gauss_2f1_series: requires |z| < 1");
  }
  cplx sum{1.0, 0.0};
  cplx term{1.0, 0.0};
  int small_in_a_row = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const double kk = static_cast<double>(k);
    term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * z;
    sum += term;
    if (std::abs(term) <= kTermTolerance * std::abs(sum)) {
      if (++small_in_a_row == 2) {
        return sum;
      }
    } else {
      small_in_a_row = 0;
    }
  }
  throw NumericalError("gauss_2f1: series did not converge within 10000 terms");
}

cplx gauss_2f1_pfaff(const HypergeomParams& params) {
  const auto& [a, b, c, z] = params;
  if (z > 0.0) {
    throw std::invalid_argument("gauss_2f1_pfaff: requires z <= 0");
  }
  const double w = z / (z - 1.0);
  const cplx prefactor = std::exp(-a * std::log1p(-z));
  return prefactor * gauss_2f1_series({a, c - b, c, w});
}

cplx gauss_2f1_reciprocal(const HypergeomParams& params) {
  const auto& [a, b, c, z] = params;
  validate_c(c);
  if (z >= -1.0) {
    throw std::invalid_argument("gauss_2f1_reciprocal: requires z < -1");
  }
  if (distance_to_integer(a - b) < 1e-12) {
    throw std::invalid_argument("gauss_2f1_reciprocal: a - b must not be an integer");
  }
  const double log_minus_z = std::log(-z);
  const double inv_z = 1.0 / z;
  const cplx log_gamma_c = log_gamma(c);

  auto branch = [&](cplx first, cplx second) -> cplx {
    // Gamma(c) Gamma(second-first) / (Gamma(second) Gamma(c-first))
    //   * (-z)^{-first} F(first, first-c+1; first-second+1; 1/z)
    if (is_nonpositive_integer(second) || is_nonpositive_integer(c - first)) {
      return {0.0, 0.0};
    }
    const cplx log_coeff = log_gamma_c + log_gamma(second - first) - log_gamma(second) -
                           log_gamma(c - first) - first * log_minus_z;
    return std::exp(log_coeff) *
           gauss_2f1_series({first, first - c + 1.0, first - second + 1.0, inv_z});
  };
  return branch(a, b) + branch(b, a);
}

cplx gauss_2f1(const HypergeomParams& params) {
  const auto& [a, b, c, z] = params;
  validate_c(c);
  if (!std::isfinite(z)) {
    throw std::invalid_argument("gauss_2f1: z must be finite");
  }
  if (z > 0.5) {
    throw std::invalid_argument("gauss_2f1: only z <= 0.5 is supported");
  }
  if (z == 0.0) {
    return {1.0, 0.0};
  }
  if (std::abs(z) <= 0.5) {
    return gauss_2f1_series(params);
  }
  // Terminating series are polynomials in z.
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
    const double degree_a = is_nonpositive_integer(a) ? -std::round(a.real()) : kMaxTerms;
    const double degree_b = is_nonpositive_integer(b) ? -std::round(b.real()) : kMaxTerms;
    const int degree = static_cast<int>(std::min(degree_a, degree_b));
    cplx sum{1.0, 0.0};
    cplx term{1.0, 0.0};
    for (int k = 0; k < degree; ++k) {
      const double kk = static_cast<double>(k);
      term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * z;
      sum += term;
    }
    return sum;
  }
  if (z >= -2.0) {
    return gauss_2f1_pfaff(params);
  }
  if (distance_to_integer(a - b) >= kIntegerGap) {
    return gauss_2f1_reciprocal(params);
  }
  // F is entire in a, so its value is the mean over a circle around a.
  // The trapezoid rule on the circle converges geometrically.
  cplx sum{0.0, 0.0};
  for (int j = 0; j < kCirclePoints; ++j) {
    const double angle = 2.0 * std::numbers::pi * j / kCirclePoints;
    const cplx shifted = a + std::polar(kCircleRadius, angle);
    sum += gauss_2f1_reciprocal({shifted, b, c, z});
  }
  return sum / static_cast<double>(kCirclePoints);
}

}  // namespace rankone
