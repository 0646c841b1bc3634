#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

#include "rankone/group_model.hpp"
#include "rankone/radial_function.hpp"

namespace rankone {

/// Character index n of SO(2); xi_n(k_theta) = e^{-i n theta}.
struct KTypeIndex {
  int n = 0;
};

enum class Side { left, right };

/// Samples of a function on SL(2,R) in polar coordinates
/// g = k_{theta1} a_t k_{theta2}: theta1, theta2 on the uniform grid
/// 2 pi j / n_theta, t on a uniform grid from 0.
///
/// Left-only samples do not depend on theta2 and store a single theta2
/// column.
class PolarSamples {
 public:
  using Function = std::function<cplx(double theta1, double t, double theta2)>;
  using LeftFunction = std::function<cplx(double theta1, double t)>;

  static PolarSamples sample(const Function& fn, double t_max = 8.0, double dt = 0.05,
                             int n_theta = 64);
  static PolarSamples sample_left(const LeftFunction& fn, double t_max = 8.0, double dt = 0.05,
                                  int n_theta = 64);

  std::size_t n_theta() const { return n_theta_; }
  std::size_t n_theta2() const { return left_only_ ? 1 : n_theta_; }
  bool left_only() const { return left_only_; }
  const std::vector<double>& t() const { return t_; }
  double theta(std::size_t j) const;

  cplx& at(std::size_t i1, std::size_t it, std::size_t i2);
  cplx at(std::size_t i1, std::size_t it, std::size_t i2) const;
  const std::vector<cplx>& values() const { return values_; }

  /// max |this - other| over the samples; grids must agree.
  double max_difference(const PolarSamples& other) const;
  double max_abs() const;

  /// CSV theta1,t,theta2,value (left-only: theta1,t,value). When any sample
  /// has a nonzero imaginary part an im_value column follows value.
  void write_csv(std::ostream& out) const;
  static PolarSamples read_csv(std::istream& in);

 private:
  PolarSamples(std::size_t n_theta, std::vector<double> t, bool left_only);

  std::size_t n_theta_ = 0;
  std::vector<double> t_;
  bool left_only_ = false;
  std::vector<cplx> values_;  // [i1][it][i2]
};

/// f#(t) = (1/4 pi^2) int int f(theta1, t, theta2) dtheta1 dtheta2 by the
/// periodic trapezoid rule, as samples (constant in both angles).
PolarSamples sphericalize_samples(const PolarSamples& f);

/// Real part of f#, as a sampled RadialFunction on the t grid (sl2r).
RadialFunction sphericalize(const RankOneGroup& group, const PolarSamples& f);

/// Circle convolution with xi_n on the chosen side:
///   left:  (xi_n * f)(theta1) = (1/2pi) int e^{-i n (theta1 - psi)} f(psi) dpsi,
///   right: (f * xi_n)(theta2) = (1/2pi) int f(psi) e^{-i n (theta2 - psi)} dpsi,
/// both by the trapezoid rule on the sample grid, which makes the result
/// an exact projection onto one discrete Fourier mode.
PolarSamples ktype_project(const RankOneGroup& group, const PolarSamples& f, KTypeIndex n,
                           Side side);

}  // namespace rankone
