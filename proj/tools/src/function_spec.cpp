#include "rankone/tools/function_spec.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "rankone/spectral_function.hpp"

namespace rankone::tools {
namespace {

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

double parse_real(std::string_view text, std::string_view what) {
  const std::string clean = trim(text);
  double value = 0.0;
  const char* begin = clean.data();
  const char* end = begin + clean.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (clean.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw UsageError("invalid number '" + clean + "' in " + std::string(what));
  }
  return value;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(trim(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) {
      return parts;
    }
    start = pos + 1;
  }
}

std::map<std::string, double> parse_keys(std::string_view body, std::string_view spec,
                                         const std::vector<std::string>& allowed) {
  std::map<std::string, double> keys;
  for (const std::string& item : split(body, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw UsageError("expected key=value in function spec '" + std::string(spec) + "'");
    }
    const std::string key = trim(item.substr(0, eq));
    bool known = false;
    for (const auto& a : allowed) {
      known = known || a == key;
    }
    if (!known) {
      throw UsageError("unknown key '" + key + "' in function spec '" + std::string(spec) + "'");
    }
    if (!keys.emplace(key, parse_real(item.substr(eq + 1), spec)).second) {
      throw UsageError("duplicate key '" + key + "' in function spec '" + std::string(spec) + "'");
    }
  }
  for (const auto& a : allowed) {
    if (!keys.count(a)) {
      throw UsageError("missing key '" + a + "' in function spec '" + std::string(spec) + "'");
    }
  }
  return keys;
}

RadialFunction read_sampled(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open function file '" + path + "'");
  }
  std::string line;
  std::getline(in, line);
  if (trim(line) != "t,value") {
    throw UsageError("function file '" + path + "' must start with the header t,value");
  }
  std::vector<double> t;
  std::vector<double> v;
  while (std::getline(in, line)) {
    if (trim(line).empty()) {
      continue;
    }
    const auto parts = split(line, ',');
    if (parts.size() != 2) {
      throw UsageError("malformed row '" + line + "' in '" + path + "'");
    }
    t.push_back(parse_real(parts[0], path));
    v.push_back(parse_real(parts[1], path));
  }
  try {
    return RadialFunction::sampled(std::move(t), std::move(v));
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

}  // namespace

RadialFunction parse_function_spec(std::string_view text) {
  const std::string spec = trim(text);
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw UsageError("function spec '" + spec + "' must look like bump:..., gauss:... or file:...");
  }
  const std::string kind = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);
  try {
    if (kind == "bump") {
      const auto keys = parse_keys(body, spec, {"c", "w"});
      return RadialFunction::bump(keys.at("c"), keys.at("w"));
    }
    if (kind == "gauss") {
      const auto keys = parse_keys(body, spec, {"s"});
      return RadialFunction::gauss(keys.at("s"));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(spec + ": " + e.what());
  }
  if (kind == "file") {
    return read_sampled(body);
  }
  throw UsageError("unknown function kind '" + kind + "' in '" + spec + "'");
}

std::vector<double> parse_grid(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() == 1) {
    return {parse_real(parts[0], "grid")};
  }
  if (parts.size() != 3) {
    throw UsageError("grid '" + std::string(text) + "' must be lo:hi:step");
  }
  const double lo = parse_real(parts[0], "grid");
  const double hi = parse_real(parts[1], "grid");
  const double step = parse_real(parts[2], "grid");
  if (!(step > 0.0) || !(hi >= lo)) {
    throw UsageError("grid '" + std::string(text) + "' needs hi >= lo and step > 0");
  }
  if ((hi - lo) / step > 1e7) {
    throw UsageError("grid '" + std::string(text) + "' has too many points");
  }
  return uniform_grid(lo, hi, step);
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> values;
  for (const auto& part : split(text, ',')) {
    values.push_back(parse_real(part, "list"));
  }
  return values;
}

cplx parse_complex(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) {
    throw UsageError("empty complex number");
  }
  if (s.back() != 'i') {
    return {parse_real(s, "complex number"), 0.0};
  }
  s.pop_back();
  // Split at the last sign that is not part of an exponent.
  std::size_t split_at = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  auto imag_part = [&](std::string part) {
    if (part.empty() || part == "+") {
      return 1.0;
    }
    if (part == "-") {
      return -1.0;
    }
    if (part.front() == '+') {
      part.erase(0, 1);
    }
    return parse_real(part, "complex number '" + std::string(text) + "'");
  };
  if (split_at == std::string::npos) {
    return {0.0, imag_part(s)};
  }
  return {parse_real(s.substr(0, split_at), "complex number '" + std::string(text) + "'"),
          imag_part(s.substr(split_at))};
}

std::vector<cplx> parse_complex_list(std::string_view text) {
  std::vector<cplx> values;
  for (const auto& part : split(text, ',')) {
    values.push_back(parse_complex(part));
  }
  return values;
}

}  // namespace rankone::tools
