#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rankone/group_model.hpp"
#include "rankone/radial_function.hpp"

namespace rankone::tools {

/// Raised for malformed command-line input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// bump:c=<real>,w=<real> | gauss:s=<real> | file:<path> (CSV t,value).
/// Unknown or missing keys are errors.
RadialFunction parse_function_spec(std::string_view text);

/// lo:hi:step (hi >= lo, step > 0), or a single number.
std::vector<double> parse_grid(std::string_view text);

/// Comma-separated reals.
std::vector<double> parse_list(std::string_view text);

/// Complex number: 1.5, -2, 0.3i, -i, 1+0.3i, 2-1e-3i.
cplx parse_complex(std::string_view text);

/// Comma-separated complex numbers.
std::vector<cplx> parse_complex_list(std::string_view text);

}  // namespace rankone::tools
