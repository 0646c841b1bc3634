#include "rankone/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

#include "rankone/errors.hpp"
#include "rankone/parallel.hpp"
#include "rankone/spherical_functions.hpp"
#include "rankone/spherical_transform.hpp"

namespace rankone {
namespace {

constexpr int kDecayWindow = 20;

std::vector<double> simpson_weights(std::size_t n, double h) {
  if (n < 4) {
    throw std::invalid_argument("wave_packet: need at least 4 grid nodes");
  }
  std::vector<double> w(n, 0.0);
  const std::size_t intervals = n - 1;
  const std::size_t simpson_end = intervals % 2 == 0 ? intervals : intervals - 3;
  for (std::size_t k = 0; k + 2 <= simpson_end; k += 2) {
    w[k] += h / 3.0;
    w[k + 1] += 4.0 * h / 3.0;
    w[k + 2] += h / 3.0;
  }
  if (simpson_end != intervals) {
    const double c = 3.0 * h / 8.0;
    w[simpson_end] += c;
    w[simpson_end + 1] += 3.0 * c;
    w[simpson_end + 2] += 3.0 * c;
    w[simpson_end + 3] += c;
  }
  return w;
}

}  // namespace

double plancherel_density(const RankOneGroup& group, double lambda) {
  return 1.0 / std::norm(c_function(group, SpectralParameter(lambda)));
}

std::vector<cplx> wave_packet(const RankOneGroup& group, const SpectralFunction& F,
                              const std::vector<double>& ts, const InversionOptions& options) {
  if (F.rows() != 1 || F.im().front() != 0.0) {
    throw std::invalid_argument("wave_packet: F must be sampled on the real axis");
  }
  const auto& grid = F.re();
  const std::size_t n = grid.size();
  if (n < 4 || grid.front() != 0.0) {
    throw std::invalid_argument("wave_packet: grid must start at 0 with at least 4 nodes");
  }
  const double h = grid[1] - grid[0];
  for (std::size_t j = 1; j < n; ++j) {
    if (std::abs(grid[j] - grid[j - 1] - h) > 1e-9 * std::max(1.0, grid[j])) {
      throw std::invalid_argument("wave_packet: grid must be uniform");
    }
  }
  std::size_t first = 0;
  while (first < n && grid[first] < options.excision) {
    ++first;
  }
  if (first + 3 > n) {
    throw std::invalid_argument("wave_packet: excision removes the whole grid");
  }
  // Spectral weights F(lambda) |c(lambda)|^{-2}.
  std::vector<cplx> weighted(n);
  parallel_for(n - first, [&](std::size_t k) {
    const std::size_t j = first + k;
    weighted[j] = F.value(0, j) * plancherel_density(group, grid[j]);
  });
  double peak = 0.0;
  for (std::size_t j = first; j < n; ++j) {
    peak = std::max(peak, std::abs(weighted[j]));
  }
  double edge = 0.0;
  for (std::size_t j = n - std::min<std::size_t>(kDecayWindow, n - first); j < n; ++j) {
    edge = std::max(edge, std::abs(weighted[j]));
  }
  if (edge > options.decay_tol * peak) {
    throw NumericalError("wave_packet: F |c|^-2 has not decayed at lambda = " +
                         std::to_string(grid.back()) + " (ratio " +
                         std::to_string(edge / peak) + ")");
  }
  const std::vector<double> w = simpson_weights(n, h);
  // integrand[j * T + i] = F c^{-2} phi_lambda_j(t_i); one evaluator per node.
  const std::size_t count = ts.size();
  std::vector<cplx> integrand(n * count);
  parallel_for(n - first, [&](std::size_t k) {
    const std::size_t j = first + k;
    const SphericalFunction phi_lambda(group, SpectralParameter(grid[j]));
    for (std::size_t i = 0; i < count; ++i) {
      integrand[j * count + i] = weighted[j] * phi_lambda(ts[i]);
    }
  });
  // Quadratic through the first three kept nodes, evaluated at the excised
  // ones.
  const double x0 = grid[first];
  const double x1 = grid[first + 1];
  const double x2 = grid[first + 2];
  for (std::size_t j = 0; j < first; ++j) {
    const double x = grid[j];
    const double l0 = (x - x1) * (x - x2) / ((x0 - x1) * (x0 - x2));
    const double l1 = (x - x0) * (x - x2) / ((x1 - x0) * (x1 - x2));
    const double l2 = (x - x0) * (x - x1) / ((x2 - x0) * (x2 - x1));
    for (std::size_t i = 0; i < count; ++i) {
      integrand[j * count + i] = l0 * integrand[first * count + i] +
                                 l1 * integrand[(first + 1) * count + i] +
                                 l2 * integrand[(first + 2) * count + i];
    }
  }
  std::vector<cplx> result(count);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < count; ++i) {
      result[i] += w[j] * integrand[j * count + i];
    }
  }
  return result;
}

PlancherelCalibration plancherel_calibration(const RankOneGroup& group) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, Realization>, PlancherelCalibration> cache;
  const auto key = std::make_tuple(group.p(), group.q(), group.realization());
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) {
      return it->second;
    }
  }
  const RadialFunction reference = RadialFunction::gauss(1.0);
  const std::vector<double> ts = uniform_grid(0.0, 3.0, 0.1);
  const std::vector<cplx> raw =
      wave_packet(group, transform_on_axis(group, reference, 20.0), ts);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    num += reference(ts[i]) * raw[i].real();
    den += raw[i].real() * raw[i].real();
  }
  PlancherelCalibration calibration{num / den, 0.0};
  for (std::size_t i = 0; i < ts.size(); ++i) {
    calibration.residual = std::max(
        calibration.residual, std::abs(calibration.constant * raw[i] - reference(ts[i])));
  }
  std::lock_guard lock(mutex);
  cache.emplace(key, calibration);
  return calibration;
}

std::vector<cplx> inverse_transform(const RankOneGroup& group, const SpectralFunction& F,
                                    const std::vector<double>& ts,
                                    const InversionOptions& options) {
  const double constant = plancherel_calibration(group).constant;
  std::vector<cplx> values = wave_packet(group, F, ts, options);
  for (cplx& v : values) {
    v *= constant;
  }
  return values;
}

cplx inverse_transform(const RankOneGroup& group, const SpectralFunction& F, double t,
                       const InversionOptions& options) {
  return inverse_transform(group, F, std::vector<double>{t}, options).front();
}

SpectralFunction transform_on_axis(const RankOneGroup& group, const RadialFunction& f,
                                   double lambda_max, double step) {
  return sample_transform(group, f, TubeDomain(group, 0.0), uniform_grid(0.0, lambda_max, step),
                          {0.0});
}

double decay_cutoff(const RankOneGroup& group, const RadialFunction& f, double decay_tol,
                    double limit) {
  constexpr double kProbeStep = 0.25;
  std::vector<double> grid = uniform_grid(kProbeStep, limit, kProbeStep);
  std::vector<double> envelope(grid.size(), -1.0);
  auto weight = [&](std::size_t j) {
    if (envelope[j] < 0.0) {
      envelope[j] = std::abs(spherical_transform_polar(group, f, SpectralParameter(grid[j]))) *
                    plancherel_density(group, grid[j]);
    }
    return envelope[j];
  };
  double peak = 0.0;
  for (double cutoff = 20.0; cutoff <= limit; cutoff *= 2.0) {
    double window = 0.0;
    for (std::size_t j = 0; j < grid.size() && grid[j] <= cutoff + 1e-9; ++j) {
      const double w = weight(j);
      peak = std::max(peak, w);
      if (grid[j] > cutoff - 5.0) {
        window = std::max(window, w);
      }
    }
    if (window <= decay_tol * peak) {
      return cutoff;
    }
  }
  throw NumericalError("decay_cutoff: |Hf| |c|^-2 does not decay below " +
                       std::to_string(decay_tol) + " before lambda = " + std::to_string(limit));
}

}  // namespace rankone
