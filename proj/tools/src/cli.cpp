#include "rankone/tools/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rankone/convolution.hpp"
#include "rankone/errors.hpp"
#include "rankone/inversion.hpp"
#include "rankone/plane_function.hpp"
#include "rankone/probes.hpp"
#include "rankone/seminorm.hpp"
#include "rankone/spectral_function.hpp"
#include "rankone/spherical_functions.hpp"
#include "rankone/spherical_transform.hpp"
#include "rankone/tools/function_spec.hpp"
#include "rankone/tools/verify.hpp"

namespace rankone::tools {
namespace {

using json = nlohmann::json;

// Runs a parser and prefixes any failure with the flag it came from.
template <class F>
auto for_flag(const std::string& flag, F&& parse) {
  try {
    return parse();
  } catch (const UsageError& e) {
    throw UsageError(flag + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    return {};
  }
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

// Appends "--key value" for every config entry whose flag is not on the
// command line already.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  auto it = std::find(args.begin(), args.end(), "--config");
  if (it == args.end()) {
    return args;
  }
  if (it + 1 == args.end()) {
    throw UsageError("--config: missing file name");
  }
  const std::string path = *(it + 1);
  args.erase(it, it + 2);
  std::ifstream in(path);
  if (!in) {
    throw UsageError("--config: cannot open '" + path + "'");
  }
  std::set<std::string> present;
  for (const auto& a : args) {
    if (a.rfind("--", 0) == 0) {
      present.insert(a.substr(2, a.find('=') == std::string::npos ? std::string::npos
                                                                  : a.find('=') - 2));
    }
  }
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("--config: line " + std::to_string(line_no) + " is not key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) {
      throw UsageError("--config: line " + std::to_string(line_no) + " has an empty key");
    }
    if (!present.count(key)) {
      args.push_back("--" + key);
      args.push_back(trim(line.substr(eq + 1)));
    }
  }
  return args;
}

std::string format_csv_number(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json maybe_complex_json(cplx z) {
  if (std::isnan(z.real()) || std::isnan(z.imag())) {
    return nullptr;
  }
  return complex_json(z);
}

void write_json(const json& doc, const std::string& path, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) {
    throw UsageError("--out: cannot write '" + path + "'");
  }
  file << text;
}

// Complex list, or a real grid lo:hi:step.
std::vector<cplx> parse_lambdas(const std::string& flag, const std::string& text) {
  return for_flag(flag, [&] {
    if (text.find(':') != std::string::npos) {
      std::vector<cplx> out;
      for (const double x : parse_grid(text)) {
        out.emplace_back(x, 0.0);
      }
      return out;
    }
    return parse_complex_list(text);
  });
}

struct GroupFlags {
  int p = 1;
  int q = 0;

  RankOneGroup group() const {
    return for_flag("--p/--q", [&] {
      return RankOneGroup(p, q, p == 1 && q == 0 ? Realization::sl2r : Realization::abstract);
    });
  }
};

// phi ----------------------------------------------------------------------

struct PhiArgs {
  std::string lambda;
  std::string t;
};

void cmd_phi(const GroupFlags& g, const PhiArgs& a, std::ostream& out) {
  const RankOneGroup group = g.group();
  const cplx lambda = for_flag("--lambda", [&] { return parse_complex(a.lambda); });
  const std::vector<double> ts = for_flag("--t", [&] { return parse_grid(a.t); });
  if (ts.front() < 0.0) {
    throw UsageError("--t: t must be non-negative");
  }
  const SphericalFunction phi_lambda(group, SpectralParameter(lambda));
  std::vector<cplx> values(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    values[i] = phi_lambda(ts[i]);
  }
  out << "t,re_phi,im_phi\n";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    out << format_csv_number(ts[i]) << ',' << format_csv_number(values[i].real()) << ','
        << format_csv_number(values[i].imag()) << '\n';
  }
}

// transform ----------------------------------------------------------------

struct TransformArgs {
  std::string fn;
  std::string lambda = "0:10:0.1";
  std::string im = "0";
  std::string method = "polar";
};

void cmd_transform(const GroupFlags& g, const TransformArgs& a, std::ostream& out) {
  const RankOneGroup group = g.group();
  const RadialFunction f = for_flag("--fn", [&] { return parse_function_spec(a.fn); });
  std::vector<double> re = for_flag("--lambda", [&] { return parse_grid(a.lambda); });
  std::vector<double> im = for_flag("--im", [&] { return parse_grid(a.im); });
  const double width = std::abs(im.front()) > std::abs(im.back()) ? std::abs(im.front())
                                                                    : std::abs(im.back());
  TubeDomain tube;
  tube.epsilon = width / group.rho();
  tube.half_width = width;
  SpectralFunction F;
  if (a.method == "polar") {
    F = sample_transform(group, f, tube, std::move(re), std::move(im));
  } else {
    for_flag("--method", [&] {
      group.require_sl2r("horocycle transform");
      return 0;
    });
    std::vector<cplx> lambdas;
    for (const double y : im) {
      for (const double x : re) {
        lambdas.emplace_back(x, y);
      }
    }
    F = SpectralFunction(tube, std::move(re), std::move(im),
                         spherical_transform_horocycle(group, f, lambdas));
  }
  F.write_csv(out);
}

// invert -------------------------------------------------------------------

struct InvertArgs {
  std::string input;
  std::string fn;
  std::string t = "0:3:0.05";
  double lambda_max = 0.0;
};

void cmd_invert(const GroupFlags& g, const InvertArgs& a, std::ostream& out) {
  const RankOneGroup group = g.group();
  const std::vector<double> ts = for_flag("--t", [&] { return parse_grid(a.t); });
  SpectralFunction F;
  if (!a.input.empty()) {
    std::ifstream in(a.input);
    if (!in) {
      throw UsageError("--input: cannot open '" + a.input + "'");
    }
    F = for_flag("--input", [&] { return SpectralFunction::read_csv(in); });
  } else {
    const RadialFunction f = for_flag("--fn", [&] { return parse_function_spec(a.fn); });
    const double cutoff = a.lambda_max > 0.0 ? a.lambda_max : decay_cutoff(group, f);
    F = transform_on_axis(group, f, cutoff);
  }
  const std::vector<cplx> values =
      for_flag(a.input.empty() ? "--fn" : "--input", [&] { return inverse_transform(group, F, ts); });
  out << "t,re_value,im_value\n";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    out << format_csv_number(ts[i]) << ',' << format_csv_number(values[i].real()) << ','
        << format_csv_number(values[i].imag()) << '\n';
  }
}

// cfun ---------------------------------------------------------------------

struct CfunArgs {
  std::string lambda = "0.5:5:0.5";
  std::string method = "fit";
};

void cmd_cfun(const GroupFlags& g, const CfunArgs& a, std::ostream& out) {
  const RankOneGroup group = g.group();
  const std::vector<cplx> lambdas = parse_lambdas("--lambda", a.lambda);
  std::vector<cplx> values(lambdas.size());
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    const SpectralParameter L(lambdas[k]);
    values[k] = a.method == "fit" ? for_flag("--lambda", [&] {
      if (lambdas[k] == cplx(0.0, 0.0)) {
        throw std::invalid_argument("the fitted c-function needs lambda != 0");
      }
      return fit_c_function(group, L).c_plus;
    })
                                  : c_function_closed_form(group, L);
  }
  out << "re_lambda,im_lambda,re_c,im_c\n";
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    out << format_csv_number(lambdas[k].real()) << ',' << format_csv_number(lambdas[k].imag())
        << ',' << format_csv_number(values[k].real()) << ',' << format_csv_number(values[k].imag())
        << '\n';
  }
}

// convolve -----------------------------------------------------------------

struct ConvolveArgs {
  std::string f;
  std::string g;
  std::string method = "oracle";
  std::string t = "0:3:0.05";
};

std::vector<cplx> convolve_by_inversion(const RankOneGroup& group, const RadialFunction& f,
                                        const RadialFunction& g, const std::vector<double>& ts) {
  // Smallest cutoff 20 * 2^k at which the product has decayed.
  for (double cutoff = 20.0;; cutoff *= 2.0) {
    const SpectralFunction F = convolve_spectral(group, f, g, uniform_grid(0.0, cutoff, 0.05));
    try {
      return inverse_transform(group, F, ts);
    } catch (const NumericalError&) {
      if (cutoff >= 1280.0) {
        throw;
      }
    }
  }
}

void cmd_convolve(const GroupFlags& gf, const ConvolveArgs& a, std::ostream& out) {
  const RankOneGroup group = gf.group();
  for_flag("--method", [&] {
    group.require_sl2r("convolve");
    return 0;
  });
  const RadialFunction f = for_flag("--f", [&] { return parse_function_spec(a.f); });
  const RadialFunction g = for_flag("--g", [&] { return parse_function_spec(a.g); });
  const std::vector<double> ts = for_flag("--t", [&] { return parse_grid(a.t); });
  std::vector<cplx> values;
  if (a.method == "oracle") {
    for (const double v : sample_convolution(group, f, g, ts)) {
      values.emplace_back(v, 0.0);
    }
  } else {
    values = convolve_by_inversion(group, f, g, ts);
  }
  out << "t,re_value,im_value\n";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    out << format_csv_number(ts[i]) << ',' << format_csv_number(values[i].real()) << ','
        << format_csv_number(values[i].imag()) << '\n';
  }
}

// seminorm -----------------------------------------------------------------

struct SeminormArgs {
  std::string fn;
  double exponent = 2.0;
  int m = 0;
  int order = 0;
};

void cmd_seminorm(const GroupFlags& g, const SeminormArgs& a, std::ostream& out) {
  const RankOneGroup group = g.group();
  const RadialFunction f = for_flag("--fn", [&] { return parse_function_spec(a.fn); });
  const double value = for_flag("--exponent", [&] {
    return seminorm_mu_p(group, f, a.exponent, a.m, a.order);
  });
  json doc = {{"function", f.describe()},
              {"group", {{"p", group.p()}, {"q", group.q()}}},
              {"exponent", a.exponent},
              {"m", a.m},
              {"order", a.order},
              {"finite", std::isfinite(value)},
              {"value", std::isfinite(value) ? json(value) : json(nullptr)}};
  out << doc.dump(2) << '\n';
}

// probe --------------------------------------------------------------------

struct ProbeArgs {
  std::string claim;
  std::string umax = "5,10,20";
  std::string lambda;
  std::string out;
};

json probe_hxi1(const RankOneGroup& group, const ProbeArgs& a) {
  const std::vector<double> u_maxes = for_flag("--umax", [&] { return parse_list(a.umax); });
  const std::vector<cplx> lambdas =
      parse_lambdas("--lambda", a.lambda.empty() ? "1,0.5i" : a.lambda);
  json sweeps = json::array();
  for (const cplx lambda : lambdas) {
    const Hxi1Sweep sweep = for_flag("--umax", [&] {
      return hxi1_regularized(group, SpectralParameter(lambda), u_maxes);
    });
    json values = json::array();
    for (const auto& v : sweep.values) {
      values.push_back({{"u_max", v.u_max},
                        {"value", complex_json(v.value)},
                        {"abs", std::abs(v.value)},
                        {"identity_slice", complex_json(v.identity_slice)}});
    }
    sweeps.push_back({{"lambda", complex_json(lambda)},
                      {"values", std::move(values)},
                      {"monotone_growth", sweep.monotone_growth},
                      {"stabilized", sweep.stabilized},
                      {"divergent", sweep.monotone_growth && !sweep.stabilized}});
  }
  return {{"claim", "hxi1"},
          {"truncation", "|u| <= u_max and |x| <= u_max"},
          {"sweeps", std::move(sweeps)}};
}

json probe_k_independence(const RankOneGroup& group, const ProbeArgs& a) {
  const std::vector<cplx> lambdas = parse_lambdas("--lambda", a.lambda.empty() ? "1" : a.lambda);
  if (lambdas.size() != 1) {
    throw UsageError("--lambda: k-independence takes a single lambda");
  }
  const SpectralParameter lambda(lambdas.front());
  const RadialFunction profile = RadialFunction::bump(0.6, 0.4);
  const PlaneFunction centred = PlaneFunction::radial_about(cplx(0.0, 1.0), profile);
  const PlaneFunction displaced = PlaneFunction::radial_about(cplx(0.4, 1.3), profile);
  const PlaneFunction averaged = displaced.k_averaged();
  std::vector<double> angles;
  for (int k = 0; k < 12; ++k) {
    angles.push_back(std::numbers::pi * k / 12.0);
  }
  const std::pair<const char*, const PlaneFunction*> witnesses[] = {
      {"centred", &centred}, {"displaced", &displaced}, {"displaced_k_averaged", &averaged}};
  const char* descriptions[] = {
      "bump:c=0.6,w=0.4 radial about i",
      "bump:c=0.6,w=0.4 radial about 0.4+1.3i",
      "K-average about i of the displaced witness",
  };
  json list = json::array();
  for (std::size_t w = 0; w < 3; ++w) {
    const KIndependenceReport r = k_independence_probe(group, *witnesses[w].second, angles, lambda);
    json values = json::array();
    for (const cplx v : r.values) {
      values.push_back(complex_json(v));
    }
    list.push_back({{"name", witnesses[w].first},
                    {"description", descriptions[w]},
                    {"values", std::move(values)},
                    {"variation", r.variation}});
  }
  return {{"claim", "k-independence"},
          {"lambda", complex_json(lambda.value())},
          {"angles", angles},
          {"witnesses", std::move(list)}};
}

json decomposition_json(const DecompositionReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"lambda", row.lambda},
                    {"h_f", complex_json(row.h_f)},
                    {"h_f_sharp", complex_json(row.h_f_sharp)},
                    {"ratio", maybe_complex_json(row.ratio)},
                    {"hxi1_u5", complex_json(row.hxi1_u5)}});
  }
  return {{"rows", std::move(rows)}, {"max_abs_h_f", r.max_abs_h_f}};
}

json probe_decomposition(const RankOneGroup& group, const ProbeArgs& a) {
  std::vector<double> lambdas;
  for (const cplx z : parse_lambdas("--lambda", a.lambda.empty() ? "0.5,1,2,3" : a.lambda)) {
    if (z.imag() != 0.0) {
      throw UsageError("--lambda: thm38 takes real lambda values");
    }
    lambdas.push_back(z.real());
  }
  const RadialFunction b = RadialFunction::bump(1.0, 0.5);
  const DecompositionReport plain = decomposition_probe(
      group, {[&](double, double t, double) { return b(t); }, b.support()}, lambdas);
  const DecompositionReport modulated = decomposition_probe(
      group, {[&](double a1, double t, double) { return b(t) * std::cos(a1); }, b.support()},
      lambdas);
  return {{"claim", "thm38"},
          {"profile", b.describe()},
          {"biinvariant", decomposition_json(plain)},
          {"modulated", decomposition_json(modulated)},
          {"modulation", "cos(theta1)"}};
}

void cmd_probe(const GroupFlags& g, const ProbeArgs& a, std::ostream& out) {
  const RankOneGroup group = g.group();
  for_flag("--claim", [&] {
    group.require_sl2r("probe");
    return 0;
  });
  json doc;
  if (a.claim == "hxi1") {
    doc = probe_hxi1(group, a);
  } else if (a.claim == "k-independence") {
    doc = probe_k_independence(group, a);
  } else {
    doc = probe_decomposition(group, a);
  }
  write_json(doc, a.out, out);
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::string json_path;
  std::vector<std::string> tol;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  ToleranceOverrides overrides;
  for (const std::string& item : a.tol) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw UsageError("--tol: expected id=value, got '" + item + "'");
    }
    const std::string id = trim(item.substr(0, eq));
    const std::vector<double> value =
        for_flag("--tol", [&] { return parse_list(item.substr(eq + 1)); });
    if (value.size() != 1) {
      throw UsageError("--tol: expected one value for '" + id + "'");
    }
    overrides[id] = value.front();
  }
  suite_criteria(a.suite);
  validate_overrides(overrides);
  const VerifyReport report = run_suite(a.suite, overrides);
  const json doc = to_json(report);
  if (a.json_path.empty()) {
    out << doc.dump(2) << '\n';
  } else {
    std::ofstream file(a.json_path);
    if (!file) {
      throw UsageError("--json: cannot write '" + a.json_path + "'");
    }
    file << doc.dump(2) << '\n';
    for (const Check& c : report.checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.id << " measured=" << c.measured
          << " tolerance=" << c.tolerance << '\n';
    }
    out << (report.pass ? "PASS" : "FAIL") << " suite " << report.suite << '\n';
  }
  return report.pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spherical harmonic analysis on real-rank-one groups", "rankone"};
  app.require_subcommand(1);
  app.fallthrough();

  GroupFlags group;
  app.add_option("--p", group.p, "multiplicity of alpha")->capture_default_str();
  app.add_option("--q", group.q, "multiplicity of 2 alpha")->capture_default_str();
  std::string config_unused;
  app.add_option("--config", config_unused, "key=value file; flags on the command line win");

  PhiArgs phi_args;
  auto* phi = app.add_subcommand("phi", "spherical function on a t grid (CSV)");
  phi->add_option("--lambda", phi_args.lambda, "spectral parameter, e.g. 1.5 or 1+0.3i")
      ->required();
  phi->add_option("--t", phi_args.t, "lo:hi:step or a single value")->required();

  TransformArgs transform_args;
  auto* transform = app.add_subcommand("transform", "spherical transform on a grid (CSV)");
  transform->add_option("--fn", transform_args.fn, "function spec")->required();
  transform->add_option("--lambda", transform_args.lambda, "real parts, lo:hi:step")
      ->capture_default_str();
  transform->add_option("--im", transform_args.im, "imaginary parts, lo:hi:step")
      ->capture_default_str();
  transform->add_option("--method", transform_args.method)
      ->check(CLI::IsMember({"polar", "horocycle"}))
      ->capture_default_str();

  InvertArgs invert_args;
  auto* invert = app.add_subcommand("invert", "wave-packet inversion (CSV)");
  auto* input_opt = invert->add_option("--input", invert_args.input, "transform CSV on [0, L]");
  auto* fn_opt = invert->add_option("--fn", invert_args.fn, "function spec to transform first");
  input_opt->excludes(fn_opt);
  invert->add_option("--t", invert_args.t)->capture_default_str();
  invert->add_option("--lambda-max", invert_args.lambda_max, "cutoff for --fn (default: automatic)");

  CfunArgs cfun_args;
  auto* cfun = app.add_subcommand("cfun", "c-function values (CSV)");
  cfun->add_option("--lambda", cfun_args.lambda, "complex list or real grid")
      ->capture_default_str();
  cfun->add_option("--method", cfun_args.method)
      ->check(CLI::IsMember({"fit", "closed"}))
      ->capture_default_str();

  ConvolveArgs convolve_args;
  auto* convolve = app.add_subcommand("convolve", "convolution of two radial functions (CSV)");
  convolve->add_option("--f", convolve_args.f, "function spec")->required();
  convolve->add_option("--g", convolve_args.g, "function spec")->required();
  convolve->add_option("--method", convolve_args.method)
      ->check(CLI::IsMember({"oracle", "spectral"}))
      ->capture_default_str();
  convolve->add_option("--t", convolve_args.t)->capture_default_str();

  SeminormArgs seminorm_args;
  auto* seminorm = app.add_subcommand("seminorm", "Schwartz seminorm (JSON)");
  seminorm->add_option("--fn", seminorm_args.fn, "function spec")->required();
  seminorm->add_option("--exponent", seminorm_args.exponent, "p in (0, 2]")
      ->capture_default_str();
  seminorm->add_option("--m", seminorm_args.m, "polynomial weight order")->capture_default_str();
  seminorm->add_option("--order", seminorm_args.order, "derivative order 0, 1 or 2")
      ->capture_default_str();

  ProbeArgs probe_args;
  auto* probe = app.add_subcommand("probe", "numerical probe report (JSON)");
  probe->add_option("--claim", probe_args.claim)
      ->required()
      ->check(CLI::IsMember({"hxi1", "k-independence", "thm38"}));
  probe->add_option("--umax", probe_args.umax, "comma-separated truncations")
      ->capture_default_str();
  probe->add_option("--lambda", probe_args.lambda, "complex list");
  probe->add_option("--out", probe_args.out, "output file (default: stdout)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run the acceptance suites");
  verify->add_option("--suite", verify_args.suite)->capture_default_str();
  verify->add_option("--json", verify_args.json_path, "write the JSON report here");
  verify->add_option("--tol", verify_args.tol, "id=value tolerance override (repeatable)");

  try {
    std::vector<std::string> args = merge_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (phi->parsed()) {
      cmd_phi(group, phi_args, out);
    } else if (transform->parsed()) {
      cmd_transform(group, transform_args, out);
    } else if (invert->parsed()) {
      if (invert_args.input.empty() && invert_args.fn.empty()) {
        throw UsageError("--input/--fn: one of them is required");
      }
      cmd_invert(group, invert_args, out);
    } else if (cfun->parsed()) {
      cmd_cfun(group, cfun_args, out);
    } else if (convolve->parsed()) {
      cmd_convolve(group, convolve_args, out);
    } else if (seminorm->parsed()) {
      cmd_seminorm(group, seminorm_args, out);
    } else if (probe->parsed()) {
      cmd_probe(group, probe_args, out);
    } else if (verify->parsed()) {
      return cmd_verify(verify_args, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace rankone::tools
