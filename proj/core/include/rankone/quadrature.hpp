#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <type_traits>

namespace rankone::quad {

/// Gauss-Legendre rule on [-1, 1]. Supported orders: 8, 16, 32, 64.
struct GaussLegendreRule {
  std::span<const double> nodes;
  std::span<const double> weights;
};

const GaussLegendreRule& gauss_legendre(int order);

/// Composite Gauss-Legendre over [lo, hi] split into equal panels no wider
/// than `panel_width`. Panels are summed left to right, so the result is
/// deterministic.
template <class F>
auto integrate_panels(F&& f, double lo, double hi, double panel_width, int order = 32)
    -> std::invoke_result_t<F&, double> {
  using Result = std::invoke_result_t<F&, double>;
  Result total{};
  if (!(hi > lo)) {
    return total;
  }
  const auto& rule = gauss_legendre(order);
  const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / panel_width - 1e-9)));
  const double width = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * width;
    const double mid = a + 0.5 * width;
    Result panel{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      panel += rule.weights[i] * f(mid + 0.5 * width * rule.nodes[i]);
    }
    total += 0.5 * width * panel;
  }
  return total;
}

/// Mean of a 2*pi-periodic function by the n-point trapezoid rule,
/// (1/n) sum f(2*pi*j/n).
template <class F>
auto periodic_mean(F&& f, int n) -> std::invoke_result_t<F&, double> {
  using Result = std::invoke_result_t<F&, double>;
  Result total{};
  for (int j = 0; j < n; ++j) {
    total += f(2.0 * std::numbers::pi * j / n);
  }
  return total / static_cast<double>(n);
}

}  // namespace rankone::quad
