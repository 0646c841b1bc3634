#include "rankone/polar_samples.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rankone/spectral_function.hpp"

namespace rankone {

PolarSamples::PolarSamples(std::size_t n_theta, std::vector<double> t, bool left_only)
    : n_theta_(n_theta), t_(std::move(t)), left_only_(left_only) {
  if (n_theta_ < 1 || t_.empty()) {
    throw std::invalid_argument("PolarSamples: empty grid");
  }
  values_.assign(n_theta_ * t_.size() * n_theta2(), cplx{});
}

double PolarSamples::theta(std::size_t j) const {
  return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_theta_);
}

cplx& PolarSamples::at(std::size_t i1, std::size_t it, std::size_t i2) {
  return values_[(i1 * t_.size() + it) * n_theta2() + i2];
}

cplx PolarSamples::at(std::size_t i1, std::size_t it, std::size_t i2) const {
  return values_[(i1 * t_.size() + it) * n_theta2() + i2];
}

PolarSamples PolarSamples::sample(const Function& fn, double t_max, double dt, int n_theta) {
  if (n_theta < 1) {
    throw std::invalid_argument("PolarSamples: n_theta must be positive");
  }
  PolarSamples samples(n_theta, uniform_grid(0.0, t_max, dt), false);
  for (std::size_t i1 = 0; i1 < samples.n_theta_; ++i1) {
    for (std::size_t it = 0; it < samples.t_.size(); ++it) {
      for (std::size_t i2 = 0; i2 < samples.n_theta_; ++i2) {
        samples.at(i1, it, i2) = fn(samples.theta(i1), samples.t_[it], samples.theta(i2));
      }
    }
  }
  return samples;
}

PolarSamples PolarSamples::sample_left(const LeftFunction& fn, double t_max, double dt,
                                       int n_theta) {
  if (n_theta < 1) {
    throw std::invalid_argument("PolarSamples: n_theta must be positive");
  }
  PolarSamples samples(n_theta, uniform_grid(0.0, t_max, dt), true);
  for (std::size_t i1 = 0; i1 < samples.n_theta_; ++i1) {
    for (std::size_t it = 0; it < samples.t_.size(); ++it) {
      samples.at(i1, it, 0) = fn(samples.theta(i1), samples.t_[it]);
    }
  }
  return samples;
}

double PolarSamples::max_difference(const PolarSamples& other) const {
  if (n_theta_ != other.n_theta_ || t_ != other.t_ || left_only_ != other.left_only_) {
    throw std::invalid_argument("PolarSamples: grids differ");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    worst = std::max(worst, std::abs(values_[k] - other.values_[k]));
  }
  return worst;
}

double PolarSamples::max_abs() const {
  double worst = 0.0;
  for (const cplx& v : values_) {
    worst = std::max(worst, std::abs(v));
  }
  return worst;
}

void PolarSamples::write_csv(std::ostream& out) const {
  const bool complex_values =
      std::any_of(values_.begin(), values_.end(), [](const cplx& v) { return v.imag() != 0.0; });
  std::ostringstream buffer;
  buffer.precision(17);
  buffer << (left_only_ ? "theta1,t,value" : "theta1,t,theta2,value")
         << (complex_values ? ",im_value\n" : "\n");
  for (std::size_t i1 = 0; i1 < n_theta_; ++i1) {
    for (std::size_t it = 0; it < t_.size(); ++it) {
      for (std::size_t i2 = 0; i2 < n_theta2(); ++i2) {
        const cplx v = at(i1, it, i2);
        buffer << theta(i1) << ',' << t_[it] << ',';
        if (!left_only_) {
          buffer << theta(i2) << ',';
        }
        buffer << v.real();
        if (complex_values) {
          buffer << ',' << v.imag();
        }
        buffer << '\n';
      }
    }
  }
  out << buffer.str();
}

PolarSamples PolarSamples::read_csv(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) {
    throw std::invalid_argument("PolarSamples::read_csv: empty input");
  }
  if (!header.empty() && header.back() == '\r') {
    header.pop_back();
  }
  bool left_only = false;
  bool complex_values = false;
  if (header == "theta1,t,theta2,value" || header == "theta1,t,theta2,value,im_value") {
    complex_values = header.size() > 21;
  } else if (header == "theta1,t,value" || header == "theta1,t,value,im_value") {
    left_only = true;
    complex_values = header.size() > 14;
  } else {
    throw std::invalid_argument("PolarSamples::read_csv: unrecognised header '" + header + "'");
  }
  const std::size_t columns = (left_only ? 3 : 4) + (complex_values ? 1 : 0);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") {
      continue;
    }
    std::istringstream row(line);
    std::vector<double> fields(columns);
    for (std::size_t c = 0; c < columns; ++c) {
      char comma = ',';
      if ((c > 0 && !(row >> comma)) || comma != ',' || !(row >> fields[c])) {
        throw std::invalid_argument("PolarSamples::read_csv: malformed row '" + line + "'");
      }
    }
    rows.push_back(std::move(fields));
  }
  std::vector<double> t;
  for (const auto& r : rows) {
    if (r[0] != rows.front()[0]) {
      break;
    }
    if (t.empty() || t.back() != r[1]) {
      t.push_back(r[1]);
    }
  }
  if (t.empty()) {
    throw std::invalid_argument("PolarSamples::read_csv: no samples");
  }
  std::size_t n2 = 1;
  if (!left_only) {
    n2 = 0;
    while (n2 < rows.size() && rows[n2][0] == rows.front()[0] && rows[n2][1] == rows.front()[1]) {
      ++n2;
    }
  }
  if (rows.size() % (t.size() * n2) != 0) {
    throw std::invalid_argument("PolarSamples::read_csv: rows do not form a grid");
  }
  const std::size_t n1 = rows.size() / (t.size() * n2);
  if (!left_only && n1 != n2) {
    throw std::invalid_argument("PolarSamples::read_csv: theta1 and theta2 grids differ");
  }
  PolarSamples samples(n1, std::move(t), left_only);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    const double re = r[left_only ? 2 : 3];
    const double im = complex_values ? r.back() : 0.0;
    samples.values_[k] = {re, im};
  }
  return samples;
}

PolarSamples sphericalize_samples(const PolarSamples& f) {
  PolarSamples result = f;
  const std::size_t n1 = f.n_theta();
  const std::size_t n2 = f.n_theta2();
  for (std::size_t it = 0; it < f.t().size(); ++it) {
    cplx total{};
    for (std::size_t i1 = 0; i1 < n1; ++i1) {
      cplx row{};
      for (std::size_t i2 = 0; i2 < n2; ++i2) {
        row += f.at(i1, it, i2);
      }
      total += row / static_cast<double>(n2);
    }
    const cplx mean = total / static_cast<double>(n1);
    for (std::size_t i1 = 0; i1 < n1; ++i1) {
      for (std::size_t i2 = 0; i2 < n2; ++i2) {
        result.at(i1, it, i2) = mean;
      }
    }
  }
  return result;
}

RadialFunction sphericalize(const RankOneGroup& group, const PolarSamples& f) {
  group.require_sl2r("sphericalize");
  const PolarSamples averaged = sphericalize_samples(f);
  std::vector<double> values(f.t().size());
  for (std::size_t it = 0; it < values.size(); ++it) {
    values[it] = averaged.at(0, it, 0).real();
  }
  return RadialFunction::sampled(f.t(), std::move(values));
}

PolarSamples ktype_project(const RankOneGroup& group, const PolarSamples& f, KTypeIndex n,
                           Side side) {
  group.require_sl2r("ktype_project");
  PolarSamples result = f;
  if (side == Side::right && f.left_only()) {
    // Constant in theta2: only the trivial type survives.
    if (n.n != 0) {
      for (std::size_t i1 = 0; i1 < f.n_theta(); ++i1) {
        for (std::size_t it = 0; it < f.t().size(); ++it) {
          result.at(i1, it, 0) = 0.0;
        }
      }
    }
    return result;
  }
  const std::size_t count = f.n_theta();
  std::vector<cplx> character(count);  // e^{i n theta_j}
  for (std::size_t j = 0; j < count; ++j) {
    character[j] = std::polar(1.0, n.n * f.theta(j));
  }
  const std::size_t outer = side == Side::left ? f.n_theta2() : f.n_theta();
  for (std::size_t it = 0; it < f.t().size(); ++it) {
    for (std::size_t o = 0; o < outer; ++o) {
      auto sample = [&](std::size_t j) {
        return side == Side::left ? f.at(j, it, o) : f.at(o, it, j);
      };
      cplx coefficient{};
      for (std::size_t j = 0; j < count; ++j) {
        coefficient += character[j] * sample(j);
      }
      coefficient /= static_cast<double>(count);
      for (std::size_t j = 0; j < count; ++j) {
        const cplx projected = std::conj(character[j]) * coefficient;
        (side == Side::left ? result.at(j, it, o) : result.at(o, it, j)) = projected;
      }
    }
  }
  return result;
}

}  // namespace rankone
