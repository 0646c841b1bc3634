#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

#include "rankone/group_model.hpp"

namespace rankone {

/// Uniform grid lo, lo + step, ..., hi (hi included when it lies on the
/// grid up to rounding). Throws std::invalid_argument unless step > 0 and
/// hi >= lo.
std::vector<double> uniform_grid(double lo, double hi, double step);

/// Samples of a function of lambda = x + i y on the rectangle re x im.
///
/// Values are stored row-major with one row per imaginary part:
/// value(i, j) is at lambda = re[j] + i im[i].
class SpectralFunction {
 public:
  SpectralFunction() = default;
  SpectralFunction(TubeDomain tube, std::vector<double> re, std::vector<double> im,
                   std::vector<cplx> values);

  /// Evaluates fn at every node (in parallel; storage order is fixed).
  static SpectralFunction sample(TubeDomain tube, std::vector<double> re, std::vector<double> im,
                                 const std::function<cplx(cplx)>& fn);

  const TubeDomain& tube() const { return tube_; }
  const std::vector<double>& re() const { return re_; }
  const std::vector<double>& im() const { return im_; }
  const std::vector<cplx>& values() const { return values_; }
  std::size_t rows() const { return im_.size(); }
  std::size_t cols() const { return re_.size(); }

  cplx lambda(std::size_t i, std::size_t j) const { return {re_[j], im_[i]}; }
  cplx value(std::size_t i, std::size_t j) const { return values_[i * re_.size() + j]; }

  /// Pointwise product on identical grids.
  SpectralFunction operator*(const SpectralFunction& other) const;

  /// CSV with header re_lambda,im_lambda,re_value,im_value, rows in storage
  /// order, 17 significant digits.
  void write_csv(std::ostream& out) const;
  /// Inverse of write_csv. The grid is recovered from the row order; the
  /// tube is not stored and must be supplied.
  static SpectralFunction read_csv(std::istream& in, TubeDomain tube = {});

 private:
  TubeDomain tube_;
  std::vector<double> re_;
  std::vector<double> im_;
  std::vector<cplx> values_;
};

/// Grid on the tube attached to `tube`: real parts from x_min to x_max with
/// step 0.1, imaginary parts with step half_width/10 clipped to
/// |Im lambda| <= 0.95 half_width.
struct TubeGrid {
  std::vector<double> re;
  std::vector<double> im;
};
TubeGrid tube_grid(const TubeDomain& tube, double x_min, double x_max);

enum class StencilOrder { second, fourth };

/// |dF/dx + i dF/dy| at node (i, j) by central differences on the grid
/// (assumed uniform near the node). The fourth-order stencil is central
/// where two neighbours exist on each side and a shifted five-point stencil
/// next to the grid edge (second order when fewer than five nodes).
/// Throws std::invalid_argument when a direct neighbour is missing.
double tube_holomorphy_defect(const SpectralFunction& F, std::size_t i, std::size_t j,
                              StencilOrder order = StencilOrder::fourth);

}  // namespace rankone
