#include "rankone/spectral_function.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rankone/parallel.hpp"

namespace rankone {

std::vector<double> uniform_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("uniform_grid: need step > 0 and hi >= lo");
  }
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = lo + static_cast<double>(i) * step;
  }
  return grid;
}

SpectralFunction::SpectralFunction(TubeDomain tube, std::vector<double> re, std::vector<double> im,
                                   std::vector<cplx> values)
    : tube_(tube), re_(std::move(re)), im_(std::move(im)), values_(std::move(values)) {
  if (values_.size() != re_.size() * im_.size()) {
    throw std::invalid_argument("SpectralFunction: values do not match the grid");
  }
}

SpectralFunction SpectralFunction::sample(TubeDomain tube, std::vector<double> re,
                                          std::vector<double> im,
                                          const std::function<cplx(cplx)>& fn) {
  std::vector<cplx> values(re.size() * im.size());
  const std::size_t cols = re.size();
  parallel_for(values.size(), [&](std::size_t k) {
    values[k] = fn({re[k % cols], im[k / cols]});
  });
  return SpectralFunction(tube, std::move(re), std::move(im), std::move(values));
}

SpectralFunction SpectralFunction::operator*(const SpectralFunction& other) const {
  if (re_ != other.re_ || im_ != other.im_) {
    throw std::invalid_argument("SpectralFunction: product needs identical grids");
  }
  std::vector<cplx> product(values_.size());
  for (std::size_t k = 0; k < values_.size(); ++k) {
    product[k] = values_[k] * other.values_[k];
  }
  return SpectralFunction(tube_, re_, im_, std::move(product));
}

void SpectralFunction::write_csv(std::ostream& out) const {
  std::ostringstream buffer;
  buffer.precision(17);
  buffer << "re_lambda,im_lambda,re_value,im_value\n";
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      const cplx v = value(i, j);
      buffer << re_[j] << ',' << im_[i] << ',' << v.real() << ',' << v.imag() << '\n';
    }
  }
  out << buffer.str();
}

SpectralFunction SpectralFunction::read_csv(std::istream& in, TubeDomain tube) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("re_lambda,im_lambda,re_value,im_value", 0) != 0) {
    throw std::invalid_argument("SpectralFunction::read_csv: missing header");
  }
  std::vector<double> re;
  std::vector<double> im;
  std::vector<cplx> values;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") {
      continue;
    }
    std::istringstream row(line);
    double field[4];
    char comma;
    if (!(row >> field[0] >> comma >> field[1] >> comma >> field[2] >> comma >> field[3])) {
      throw std::invalid_argument("SpectralFunction::read_csv: malformed line " +
                                  std::to_string(line_no));
    }
    if (im.empty() || im.back() != field[1]) {
      im.push_back(field[1]);
    }
    if (im.size() == 1) {
      re.push_back(field[0]);
    }
    values.emplace_back(field[2], field[3]);
  }
  if (values.empty() || values.size() != re.size() * im.size()) {
    throw std::invalid_argument("SpectralFunction::read_csv: rows do not form a rectangular grid");
  }
  return SpectralFunction(tube, std::move(re), std::move(im), std::move(values));
}

TubeGrid tube_grid(const TubeDomain& tube, double x_min, double x_max) {
  TubeGrid grid;
  grid.re = uniform_grid(x_min, x_max, 0.1);
  if (tube.half_width <= 0.0) {
    grid.im = {0.0};
    return grid;
  }
  const double step = tube.half_width / 10.0;
  const int reach = static_cast<int>(std::floor(0.95 * tube.half_width / step + 1e-9));
  for (int k = -reach; k <= reach; ++k) {
    grid.im.push_back(k * step);
  }
  return grid;
}

namespace {

// Fourth-order first derivative at index k of samples at(0..n-1) with
// spacing h: central when two neighbours exist on each side, otherwise the
// five-point stencil shifted one node towards the interior.
template <class At>
cplx derivative4(At at, std::size_t k, std::size_t n, double h) {
  if (k >= 2 && k + 2 < n) {
    return (-at(k + 2) + 8.0 * at(k + 1) - 8.0 * at(k - 1) + at(k - 2)) / (12.0 * h);
  }
  if (k == 1 && n >= 5) {
    return (-3.0 * at(0) - 10.0 * at(1) + 18.0 * at(2) - 6.0 * at(3) + at(4)) / (12.0 * h);
  }
  if (k + 2 == n && n >= 5) {
    return (3.0 * at(n - 1) + 10.0 * at(n - 2) - 18.0 * at(n - 3) + 6.0 * at(n - 4) -
            at(n - 5)) /
           (12.0 * h);
  }
  return (at(k + 1) - at(k - 1)) / (2.0 * h);
}

}  // namespace

double tube_holomorphy_defect(const SpectralFunction& F, std::size_t i, std::size_t j,
                              StencilOrder order) {
  if (i == 0 || j == 0 || i + 1 >= F.rows() || j + 1 >= F.cols()) {
    throw std::invalid_argument("tube_holomorphy_defect: node needs four neighbours");
  }
  const double hx = F.re()[j + 1] - F.re()[j];
  const double hy = F.im()[i + 1] - F.im()[i];
  auto along_x = [&](std::size_t k) { return F.value(i, k); };
  auto along_y = [&](std::size_t k) { return F.value(k, j); };
  cplx dx;
  cplx dy;
  if (order == StencilOrder::fourth) {
    dx = derivative4(along_x, j, F.cols(), hx);
    dy = derivative4(along_y, i, F.rows(), hy);
  } else {
    dx = (along_x(j + 1) - along_x(j - 1)) / (2.0 * hx);
    dy = (along_y(i + 1) - along_y(i - 1)) / (2.0 * hy);
  }
  return std::abs(dx + cplx(0.0, 1.0) * dy);
}

}  // namespace rankone
