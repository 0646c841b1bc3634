#pragma once

#include <memory>
#include <string>
#include <vector>

namespace rankone {

/// Even smooth function of t, standing for a K-biinvariant function on G.
///
///   bump(c, w):  exp(1 - 1/(1 - x^2)), x = (|t| - c)/w, zero for |x| >= 1
///   gauss(s):    exp(-t^2/s^2)
///   sampled:     natural cubic spline through (t_i, v_i), mirrored to
///                negative t so the interpolant is even; zero beyond the
///                last node
///
/// Every preset carries an amplitude, so zero() and scalar multiples are
/// ordinary values. Copies share the spline and are safe to use from any
/// number of threads.
class RadialFunction {
 public:
  enum class Kind { bump, gauss, sampled };

  static RadialFunction zero();
  /// Requires w > 0 and either c = 0 or c >= w (so the bump is smooth at 0).
  static RadialFunction bump(double center, double width);
  static RadialFunction gauss(double scale);
  /// Requires at least 4 nodes, t_0 >= 0, strictly increasing t.
  static RadialFunction sampled(std::vector<double> t, std::vector<double> values);

  double operator()(double t) const { return derivative(t, 0); }
  /// d^order/dt^order f(t) for order in {0, 1, 2}.
  double derivative(double t, int order) const;

  /// f vanishes (bump, sampled) or is below e^{-45} (gauss) for |t| beyond this.
  double support() const;
  /// f vanishes for |t| below this (bump with c > w); 0 otherwise.
  double inner_radius() const;

  RadialFunction scaled(double factor) const;

  Kind kind() const { return kind_; }
  double amplitude() const { return amplitude_; }
  double center() const { return a_; }
  double width() const { return b_; }
  double scale() const { return a_; }
  const std::vector<double>& nodes() const;
  const std::vector<double>& node_values() const;

  std::string describe() const;

 private:
  struct Spline;

  RadialFunction(Kind kind, double a, double b) : kind_(kind), a_(a), b_(b) {}

  Kind kind_;
  double a_ = 0.0;
  double b_ = 0.0;
  double amplitude_ = 1.0;
  std::shared_ptr<const Spline> spline_;
};

}  // namespace rankone
