#pragma once

#include <vector>

#include "rankone/group_model.hpp"
#include "rankone/radial_function.hpp"
#include "rankone/spectral_function.hpp"

namespace rankone {

struct InversionOptions {
  /// Nodes with lambda below this get the integrand by quadratic
  /// extrapolation from the next three nodes.
  double excision = 1e-3;
  /// |F c^{-2}| at the last node relative to its maximum over the grid.
  double decay_tol = 1e-5;
};

/// |c(lambda)|^{-2} from the fitted c-function, real lambda != 0.
double plancherel_density(const RankOneGroup& group, double lambda);

/// int_0^{Lambda} F(lambda) phi_lambda(t) |c(lambda)|^{-2} d lambda by the
/// composite Simpson rule (3/8 rule on the last three intervals when the
/// interval count is odd), without the Plancherel constant.
///
/// F must be sampled on a uniform real-axis grid starting at 0. Throws
/// NumericalError when the integrand has not decayed at the last node.
std::vector<cplx> wave_packet(const RankOneGroup& group, const SpectralFunction& F,
                              const std::vector<double>& ts, const InversionOptions& options = {});

struct PlancherelCalibration {
  double constant = 0.0;
  /// Max |C * raw - f| over the calibration points.
  double residual = 0.0;
};

/// Least-squares C with C * wave_packet(H gauss(1)) ~ gauss(1) on
/// t in [0, 3] (step 0.1), lambda in [0, 20] (step 0.05). Computed once per
/// group and cached.
PlancherelCalibration plancherel_calibration(const RankOneGroup& group);

/// C_pl * wave_packet(F).
std::vector<cplx> inverse_transform(const RankOneGroup& group, const SpectralFunction& F,
                                    const std::vector<double>& ts,
                                    const InversionOptions& options = {});
cplx inverse_transform(const RankOneGroup& group, const SpectralFunction& F, double t,
                       const InversionOptions& options = {});

/// Polar transform of f on the real-axis grid [0, lambda_max] with the
/// given step.
SpectralFunction transform_on_axis(const RankOneGroup& group, const RadialFunction& f,
                                   double lambda_max, double step = 0.05);

/// Smallest lambda_max in {20, 40, 80, ...} up to `limit` where
/// |Hf| c^{-2} has decayed to decay_tol of its maximum.
double decay_cutoff(const RankOneGroup& group, const RadialFunction& f, double decay_tol = 1e-5,
                    double limit = 1280.0);

}  // namespace rankone
