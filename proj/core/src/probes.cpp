#include "rankone/probes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "rankone/parallel.hpp"
#include "rankone/polar_samples.hpp"
#include "rankone/quadrature.hpp"
#include "rankone/spherical_functions.hpp"
#include "rankone/spherical_transform.hpp"

namespace rankone {
namespace {

constexpr double kUPanel = 0.5;
constexpr double kVPanel = 0.25;
constexpr int kOrder = 16;
constexpr double kStableTol = 1e-4;

struct Node {
  double x;
  double w;
  std::size_t level;
};

// Gauss-Legendre nodes on [a, b] with panels no wider than `panel`.
void append_nodes(std::vector<Node>& out, double a, double b, double panel, std::size_t level) {
  if (!(b > a)) {
    return;
  }
  const auto& rule = quad::gauss_legendre(kOrder);
  const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / panel - 1e-9)));
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      out.push_back({mid + 0.5 * width * rule.nodes[i], 0.5 * width * rule.weights[i], level});
    }
  }
}

}  // namespace

Hxi1Sweep hxi1_regularized(const RankOneGroup& group, SpectralParameter lambda,
                           std::vector<double> u_maxes) {
  group.require_sl2r("hxi1_regularized");
  std::sort(u_maxes.begin(), u_maxes.end());
  u_maxes.erase(std::unique(u_maxes.begin(), u_maxes.end()), u_maxes.end());
  if (u_maxes.empty() || !(u_maxes.front() > 0.0)) {
    throw std::invalid_argument("hxi1_regularized: u_max values must be positive");
  }
  const std::size_t levels = u_maxes.size();
  std::vector<Node> u_nodes;
  std::vector<Node> v_nodes;  // x = sinh v >= 0
  for (std::size_t k = 0; k < levels; ++k) {
    const double lo = k == 0 ? 0.0 : u_maxes[k - 1];
    append_nodes(u_nodes, -u_maxes[k], -lo, kUPanel, k);
    append_nodes(u_nodes, lo, u_maxes[k], kUPanel, k);
    append_nodes(v_nodes, std::asinh(lo), std::asinh(u_maxes[k]), kVPanel, k);
  }
  const SphericalFunction phi_lambda(group, lambda);
  const cplx exponent = cplx(0.0, 1.0) * lambda.value() + group.rho();

  // partial[i][k]: x-integral over v-level k at u node i.
  std::vector<std::vector<cplx>> partial(u_nodes.size(), std::vector<cplx>(levels));
  parallel_for(u_nodes.size(), [&](std::size_t i) {
    const double u = u_nodes[i].x;
    const double base = 2.0 * std::sinh(0.5 * u) * std::sinh(0.5 * u);
    const double stretch = 0.5 * std::exp(u);
    for (const Node& v : v_nodes) {
      const double x = std::sinh(v.x);
      const double t = radial_from_cosh_minus_one(base + stretch * x * x);
      partial[i][v.level] += v.w * std::cosh(v.x) * phi_lambda(t);
    }
  });
  std::vector<cplx> cell_sum(levels);
  for (std::size_t i = 0; i < u_nodes.size(); ++i) {
    const cplx weight = u_nodes[i].w * std::exp(exponent * u_nodes[i].x);
    for (std::size_t k = 0; k < levels; ++k) {
      // Both signs of x.
      cell_sum[std::max(k, u_nodes[i].level)] += 2.0 * weight * partial[i][k];
    }
  }
  std::vector<cplx> slice_sum(levels);
  for (const Node& v : v_nodes) {
    const double x = std::sinh(v.x);
    slice_sum[v.level] +=
        2.0 * v.w * std::cosh(v.x) * phi_lambda(radial_from_cosh_minus_one(0.5 * x * x));
  }

  Hxi1Sweep sweep{lambda.value(), {}, true, false};
  cplx running{};
  cplx running_slice{};
  for (std::size_t k = 0; k < levels; ++k) {
    running += cell_sum[k];
    running_slice += slice_sum[k];
    sweep.values.push_back({u_maxes[k], running, running_slice});
    if (k > 0 && !(std::abs(running) > std::abs(sweep.values[k - 1].value))) {
      sweep.monotone_growth = false;
    }
  }
  if (levels < 2) {
    sweep.monotone_growth = false;
  } else {
    const cplx last = sweep.values[levels - 1].value;
    const cplx prev = sweep.values[levels - 2].value;
    sweep.stabilized = std::abs(last - prev) <= kStableTol * std::max(1.0, std::abs(last));
  }
  return sweep;
}

DecompositionReport decomposition_probe(const RankOneGroup& group, const PolarFunction& f,
                                        const std::vector<double>& lambdas) {
  group.require_sl2r("decomposition_probe");
  constexpr int kThetaNodes = 64;
  constexpr double kPanel = 0.125;
  constexpr double kDt = 0.01;
  const double t_max = std::ceil(f.support / kDt) * kDt + kDt;
  const PolarSamples samples = PolarSamples::sample(
      [&](double a, double t, double b) { return cplx(f.fn(a, t, b), 0.0); }, t_max, kDt,
      kThetaNodes);
  const RadialFunction sharp = sphericalize(group, samples);

  DecompositionReport report;
  report.rows.resize(lambdas.size());
  parallel_for(lambdas.size(), [&](std::size_t l) {
    const SpectralParameter lambda(lambdas[l]);
    const SphericalFunction phi_lambda(group, lambda.weyl_reflected());
    DecompositionRow& row = report.rows[l];
    row.lambda = lambdas[l];
    row.h_f = quad::integrate_panels(
        [&](double t) {
          const double mean = quad::periodic_mean(
              [&](double a) {
                return quad::periodic_mean([&](double b) { return f.fn(a, t, b); }, kThetaNodes);
              },
              kThetaNodes);
          return mean * jacobian(group, t) * phi_lambda(t);
        },
        0.0, f.support, kPanel);
    row.h_f_sharp = spherical_transform_polar(group, sharp, lambda);
    row.ratio = std::abs(row.h_f_sharp) < 1e-14
                    ? cplx(std::numeric_limits<double>::quiet_NaN(), 0.0)
                    : row.h_f / row.h_f_sharp;
    row.hxi1_u5 = hxi1_regularized(group, lambda, {5.0}).values.front().value;
  });
  for (const auto& row : report.rows) {
    report.max_abs_h_f = std::max(report.max_abs_h_f, std::abs(row.h_f));
  }
  return report;
}

KIndependenceReport k_independence_probe(const RankOneGroup& group, const PlaneFunction& f,
                                         const std::vector<double>& angles,
                                         SpectralParameter lambda) {
  group.require_sl2r("k_independence_probe");
  KIndependenceReport report{angles, std::vector<cplx>(angles.size()), 0.0};
  parallel_for(angles.size(), [&](std::size_t k) {
    report.values[k] = symmetric_transform(group, f, angles[k], lambda);
  });
  cplx mean{};
  for (const cplx& v : report.values) {
    mean += v;
  }
  mean /= static_cast<double>(std::max<std::size_t>(1, angles.size()));
  for (const cplx& v : report.values) {
    report.variation = std::max(report.variation, std::abs(v - mean));
  }
  return report;
}

}  // namespace rankone
