#include "rankone/seminorm.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "rankone/parallel.hpp"

namespace rankone {
namespace {

constexpr double kTSup = 40.0;
constexpr double kStep = 0.05;
constexpr int kGrowthWindow = 20;

}  // namespace

double seminorm_mu_p(const RankOneGroup& group, const RadialFunction& f, double p, int m,
                     int derivative_order) {
  if (!(p > 0.0 && p <= 2.0) || m < 0 || derivative_order < 0 || derivative_order > 2) {
    throw std::invalid_argument("seminorm_mu_p: need p in (0, 2], m >= 0, order in {0, 1, 2}");
  }
  const int count = static_cast<int>(std::lround(kTSup / kStep)) + 1;
  std::vector<double> weighted(count);
  parallel_for(count, [&](std::size_t k) {
    const double t = k * kStep;
    const double value = std::abs(f.derivative(t, derivative_order));
    // Xi^{-2/p} overflows long before the product matters when value == 0.
    weighted[k] = value == 0.0 ? 0.0
                               : value * std::pow(xi(group, t), -2.0 / p) * std::pow(1.0 + t, m);
  });
  bool growing = true;
  for (int k = count - kGrowthWindow; k < count; ++k) {
    growing = growing && weighted[k] > weighted[k - 1];
  }
  if (growing) {
    return std::numeric_limits<double>::infinity();
  }
  double sup = 0.0;
  for (double w : weighted) {
    sup = std::max(sup, w);
  }
  return sup;
}

}  // namespace rankone
