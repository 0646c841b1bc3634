#include "rankone/radial_function.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_spline.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rankone {

// e^{-45} ~ 2.9e-20: far below any tolerance used with Gaussian inputs.
constexpr double kGaussCutoff = 45.0;

struct RadialFunction::Spline {
  std::vector<double> t;
  std::vector<double> values;
  std::vector<double> mirrored_t;
  std::vector<double> mirrored_values;
  gsl_spline* spline = nullptr;

  Spline(std::vector<double> t_in, std::vector<double> v_in)
      : t(std::move(t_in)), values(std::move(v_in)) {
    const bool has_origin = t.front() == 0.0;
    for (std::size_t i = t.size(); i-- > (has_origin ? 1u : 0u);) {
      mirrored_t.push_back(-t[i]);
      mirrored_values.push_back(values[i]);
    }
    mirrored_t.insert(mirrored_t.end(), t.begin(), t.end());
    mirrored_values.insert(mirrored_values.end(), values.begin(), values.end());
    gsl_set_error_handler_off();
    spline = gsl_spline_alloc(gsl_interp_cspline, mirrored_t.size());
    if (spline == nullptr ||
        gsl_spline_init(spline, mirrored_t.data(), mirrored_values.data(), mirrored_t.size()) !=
            GSL_SUCCESS) {
      gsl_spline_free(spline);
      throw std::invalid_argument("RadialFunction::sampled: spline construction failed");
    }
  }
  ~Spline() { gsl_spline_free(spline); }
  Spline(const Spline&) = delete;
  Spline& operator=(const Spline&) = delete;

  double eval(double x, int order) const {
    if (std::abs(x) > t.back()) {
      return 0.0;
    }
    // A null accelerator keeps evaluation free of shared mutable state.
    switch (order) {
      case 0:
        return gsl_spline_eval(spline, x, nullptr);
      case 1:
        return gsl_spline_eval_deriv(spline, x, nullptr);
      default:
        return gsl_spline_eval_deriv2(spline, x, nullptr);
    }
  }
};

RadialFunction RadialFunction::zero() {
  RadialFunction f(Kind::gauss, 1.0, 0.0);
  f.amplitude_ = 0.0;
  return f;
}

RadialFunction RadialFunction::bump(double center, double width) {
  if (!(width > 0.0) || !(center >= 0.0) || (center > 0.0 && center < width)) {
    throw std::invalid_argument("RadialFunction::bump: need w > 0 and c = 0 or c >= w");
  }
  return RadialFunction(Kind::bump, center, width);
}

RadialFunction RadialFunction::gauss(double scale) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("RadialFunction::gauss: scale must be positive");
  }
  return RadialFunction(Kind::gauss, scale, 0.0);
}

RadialFunction RadialFunction::sampled(std::vector<double> t, std::vector<double> values) {
  if (t.size() != values.size() || t.size() < 4) {
    throw std::invalid_argument("RadialFunction::sampled: need at least 4 (t, value) pairs");
  }
  if (t.front() < 0.0) {
    throw std::invalid_argument("RadialFunction::sampled: t must be non-negative");
  }
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!(t[i] > t[i - 1])) {
      throw std::invalid_argument("RadialFunction::sampled: t must be strictly increasing");
    }
  }
  RadialFunction f(Kind::sampled, 0.0, 0.0);
  f.spline_ = std::make_shared<const Spline>(std::move(t), std::move(values));
  return f;
}

double RadialFunction::derivative(double t, int order) const {
  if (order < 0 || order > 2) {
    throw std::invalid_argument("RadialFunction::derivative: order must be 0, 1 or 2");
  }
  if (amplitude_ == 0.0) {
    return 0.0;
  }
  switch (kind_) {
    case Kind::bump: {
      const double x = (std::abs(t) - a_) / b_;
      if (std::abs(x) >= 1.0) {
        return 0.0;
      }
      const double u = 1.0 - x * x;
      const double value = amplitude_ * std::exp(1.0 - 1.0 / u);
      if (order == 0) {
        return value;
      }
      const double g1 = -2.0 * x / (u * u);
      if (order == 1) {
        return (t < 0.0 ? -1.0 : 1.0) * value * g1 / b_;
      }
      const double g2 = -2.0 / (u * u) - 8.0 * x * x / (u * u * u);
      return value * (g1 * g1 + g2) / (b_ * b_);
    }
    case Kind::gauss: {
      const double s2 = a_ * a_;
      const double value = amplitude_ * std::exp(-t * t / s2);
      if (order == 0) {
        return value;
      }
      if (order == 1) {
        return -2.0 * t / s2 * value;
      }
      return (4.0 * t * t / (s2 * s2) - 2.0 / s2) * value;
    }
    case Kind::sampled:
      return amplitude_ * spline_->eval(t, order);
  }
  return 0.0;
}

double RadialFunction::support() const {
  switch (kind_) {
    case Kind::bump:
      return a_ + b_;
    case Kind::gauss:
      return a_ * std::sqrt(kGaussCutoff);
    case Kind::sampled:
      return spline_->t.back();
  }
  return 0.0;
}

double RadialFunction::inner_radius() const {
  return kind_ == Kind::bump && a_ > b_ ? a_ - b_ : 0.0;
}

RadialFunction RadialFunction::scaled(double factor) const {
  RadialFunction copy = *this;
  copy.amplitude_ *= factor;
  return copy;
}

const std::vector<double>& RadialFunction::nodes() const {
  static const std::vector<double> empty;
  return spline_ ? spline_->t : empty;
}

const std::vector<double>& RadialFunction::node_values() const {
  static const std::vector<double> empty;
  return spline_ ? spline_->values : empty;
}

std::string RadialFunction::describe() const {
  std::ostringstream out;
  out.precision(17);
  if (amplitude_ == 0.0) {
    return "zero";
  }
  if (amplitude_ != 1.0) {
    out << amplitude_ << "*";
  }
  switch (kind_) {
    case Kind::bump:
      out << "bump:c=" << a_ << ",w=" << b_;
      break;
    case Kind::gauss:
      out << "gauss:s=" << a_;
      break;
    case Kind::sampled:
      out << "sampled:" << spline_->t.size() << " nodes";
      break;
  }
  return out.str();
}

}  // namespace rankone
