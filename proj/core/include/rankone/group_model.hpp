#pragma once

#include <array>
#include <complex>
#include <functional>
#include <string>

namespace rankone {

using cplx = std::complex<double>;

enum class Realization { abstract, sl2r };

/// Real-rank-one group data: multiplicities p = m(alpha), q = m(2 alpha) and
/// the half-sum rho = (p + 2q)/2 evaluated on H0, where alpha(H0) = 1.
///
/// The sl2r realization (p, q) = (1, 0) additionally provides the 2x2 matrix
/// oracles (radial_part, horocycle integrals, K-averages).
class RankOneGroup {
 public:
  /// Throws std::invalid_argument unless p, q >= 0, p + q >= 1, and
  /// (p, q) = (1, 0) when the realization is sl2r.
  RankOneGroup(int p, int q, Realization realization = Realization::abstract);

  static RankOneGroup sl2r() { return RankOneGroup(1, 0, Realization::sl2r); }

  int p() const { return p_; }
  int q() const { return q_; }
  double rho() const { return 0.5 * (p_ + 2 * q_); }
  Realization realization() const { return realization_; }
  bool is_sl2r() const { return realization_ == Realization::sl2r; }

  /// Throws std::invalid_argument naming `operation` unless sl2r.
  void require_sl2r(const char* operation) const;

  std::string describe() const;

  friend bool operator==(const RankOneGroup&, const RankOneGroup&) = default;

 private:
  int p_;
  int q_;
  Realization realization_;
};

/// A point lambda of the complexified one-dimensional dual, in the unitary
/// convention: the tempered spectrum is the real axis and the Casimir
/// eigenvalue of phi_lambda is -(lambda^2 + rho^2). The exponent variable of
/// the radial ODE is s = i lambda.
class SpectralParameter {
 public:
  constexpr SpectralParameter() = default;
  constexpr explicit SpectralParameter(cplx lambda) : lambda_(lambda) {}
  constexpr explicit SpectralParameter(double lambda) : lambda_(lambda, 0.0) {}

  constexpr cplx value() const { return lambda_; }
  cplx ode_exponent() const { return cplx(0.0, 1.0) * lambda_; }

  /// Image under the nontrivial Weyl group element, lambda -> -lambda.
  SpectralParameter weyl_reflected() const { return SpectralParameter(-lambda_); }

  /// Representative of the Weyl orbit with Re > 0, or Re == 0 and Im >= 0.
  SpectralParameter canonical() const;

  bool is_tempered() const { return lambda_.imag() == 0.0; }

 private:
  cplx lambda_{0.0, 0.0};
};

/// Tube domain a* + i epsilon C_rho; in rank one C_rho = [-rho, rho], so the
/// tube is the strip |Im lambda| <= epsilon * rho.
struct TubeDomain {
  double epsilon = 0.0;
  double half_width = 0.0;

  TubeDomain() = default;
  TubeDomain(const RankOneGroup& group, double epsilon);

  /// Tube attached to the Schwartz exponent p in (0, 2]: epsilon = 2/p - 1.
  static TubeDomain for_schwartz_exponent(const RankOneGroup& group, double p);

  bool contains(cplx lambda) const { return std::abs(lambda.imag()) <= half_width; }
};

/// 2x2 real matrix of determinant one (SL(2,R) realization).
class GroupElement {
 public:
  GroupElement();  // identity
  /// Throws std::invalid_argument if |det - 1| > 1e-10.
  explicit GroupElement(const std::array<double, 4>& row_major);

  /// k_theta = [[cos, -sin], [sin, cos]].
  static GroupElement rotation(double theta);
  /// a_t = exp(t H0) = diag(e^{t/2}, e^{-t/2}).
  static GroupElement diagonal(double t);
  /// n_x = [[1, x], [0, 1]].
  static GroupElement unipotent(double x);
  /// k_{theta1} a_t k_{theta2}.
  static GroupElement polar(double theta1, double t, double theta2);

  double operator()(int row, int col) const { return m_[2 * row + col]; }
  const std::array<double, 4>& entries() const { return m_; }
  double determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  GroupElement inverse() const;
  /// Mobius action on the upper half-plane.
  cplx act(cplx z) const;

  friend GroupElement operator*(const GroupElement& lhs, const GroupElement& rhs);

 private:
  struct Unchecked {};
  GroupElement(const std::array<double, 4>& row_major, Unchecked) : m_(row_major) {}
  void renormalize();

  std::array<double, 4> m_;
};

/// Radial density J(t) = sinh(t)^p sinh(2t)^q of dx = J(t) dk dt dk.
double jacobian(const RankOneGroup& group, double t);

/// Unique t >= 0 with g in K a_t K. Uses
/// cosh t - 1 = ((a - d)^2 + (b + c)^2) / 2, which equals |g|_F^2/2 - 1 for
/// det g = 1 and stays accurate near the identity.
/// Throws std::invalid_argument for a matrix far from unimodular.
double radial_part(const GroupElement& g);

/// t >= 0 from the value of cosh(t) - 1 >= 0, accurate for small t.
double radial_from_cosh_minus_one(double cosh_minus_one);

/// Hyperbolic distance in the upper half-plane (curvature -1), matching
/// radial_part: d(g i, i) = radial_part(g).
double hyperbolic_distance(cplx z, cplx w);

/// Xi(a_t) = phi_0(a_t).
double xi(const RankOneGroup& group, double t);

/// sigma(a_t) = |t|.
double sigma(const RankOneGroup& group, double t);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  double tail_estimate = 0.0;
};

/// Integral over G of a K-biinvariant integrand F, reduced to
/// int_0^{t_max} F(t) J(t) dt with int_K dk = 1.
///
/// Composite 32-point Gauss-Legendre with panels of width 0.25 and one
/// refinement (panels halved); the refined value is returned and the
/// difference is reported as the error estimate. The integrand is also
/// integrated over one panel beyond t_max; if that tail exceeds `tol`,
/// NumericalError is thrown.
QuadratureResult integrate_radial_detailed(const RankOneGroup& group,
                                           const std::function<double(double)>& f,
                                           double t_max, double tol);

double integrate_radial(const RankOneGroup& group, const std::function<double(double)>& f,
                        double t_max, double tol);

}  // namespace rankone
