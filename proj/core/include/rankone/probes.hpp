#pragma once

#include <functional>
#include <vector>

#include "rankone/group_model.hpp"
#include "rankone/plane_function.hpp"

namespace rankone {

struct Hxi1Value {
  double u_max = 0.0;
  /// int_{|u| <= u_max} int_{|x| <= u_max} e^{(i lambda + rho) u} phi_lambda(a_u n_x) du dx
  cplx value;
  /// The u = 0 slice, int_{|x| <= u_max} phi_lambda(n_x) dx.
  cplx identity_slice;
};

struct Hxi1Sweep {
  cplx lambda;
  std::vector<Hxi1Value> values;
  /// |value| strictly increasing along the sweep.
  bool monotone_growth = false;
  /// Last two values agree to 1e-4 relative (absolute below 1).
  bool stabilized = false;
};

/// Truncations of int_{AN} e^{(i lambda + rho)(log a)} phi_lambda(an) da dn
/// (trivial K-type, so the K-integral of xi is 1) on the boxes
/// |u|, |x| <= u_max for every u_max in the list (sl2r). The boxes are nested
/// and share quadrature panels, so one pass produces the whole sweep.
Hxi1Sweep hxi1_regularized(const RankOneGroup& group, SpectralParameter lambda,
                           std::vector<double> u_maxes);

/// Function on SL(2,R) in polar coordinates k_{theta1} a_t k_{theta2},
/// vanishing for t > support.
struct PolarFunction {
  std::function<double(double theta1, double t, double theta2)> fn;
  double support = 0.0;
};

struct DecompositionRow {
  double lambda = 0.0;
  cplx h_f;        // int_G f phi_{-lambda} dx, full polar quadrature
  cplx h_f_sharp;  // transform of f#, sphericalized from 64 x 64 polar samples, t step 0.01
  /// h_f / h_f_sharp; NaN when |h_f_sharp| < 1e-14.
  cplx ratio;
  /// Regularized (H xi_1)(lambda) on the box u_max = 5.
  cplx hxi1_u5;
};

struct DecompositionReport {
  std::vector<DecompositionRow> rows;
  double max_abs_h_f = 0.0;
};

/// Numerical record of the scalar transform of a non-biinvariant f against
/// that of its sphericalization, next to regularized H xi_1 values. Asserts
/// nothing.
DecompositionReport decomposition_probe(const RankOneGroup& group, const PolarFunction& f,
                                        const std::vector<double>& lambdas);

struct KIndependenceReport {
  std::vector<double> angles;
  std::vector<cplx> values;
  /// max_k |H(f)(k M : lambda) - mean over k|.
  double variation = 0.0;
};

/// symmetric_transform over the k-grid (sl2r).
KIndependenceReport k_independence_probe(const RankOneGroup& group, const PlaneFunction& f,
                                         const std::vector<double>& angles,
                                         SpectralParameter lambda);

}  // namespace rankone
