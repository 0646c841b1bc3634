#pragma once

#include "rankone/group_model.hpp"
#include "rankone/radial_function.hpp"

namespace rankone {

/// mu^p_m(f) = sup_t |f^{(order)}(t)| Xi(t)^{-2/p} (1 + t)^m over the grid
/// t = 0, 0.05, ..., 40.
///
/// Returns +infinity when the weighted values increase strictly over the
/// last 20 grid points (the supremum is attained beyond the grid, i.e. f is
/// not in the Schwartz space of exponent p). Requires p in (0, 2],
/// m >= 0, order in {0, 1, 2}.
double seminorm_mu_p(const RankOneGroup& group, const RadialFunction& f, double p, int m,
                     int derivative_order);

}  // namespace rankone
