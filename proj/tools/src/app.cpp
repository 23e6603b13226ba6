// Copyright 2026 The ccgeom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ccgeom_cli/app.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ccgeom/cc_metric.hpp"
#include "ccgeom/distributions.hpp"
#include "ccgeom/errors.hpp"
#include "ccgeom/families.hpp"
#include "ccgeom/fixtures.hpp"
#include "ccgeom/flow.hpp"
#include "ccgeom/homogeneity.hpp"
#include "ccgeom/smoothing.hpp"
#include "ccgeom/zigzag.hpp"
#include "ccgeom_cli/csv.hpp"
#include "ccgeom_cli/scenario.hpp"

namespace ccgeom::cli {
namespace {

/// Flat key=value text.
class Report {
 public:
  void put(const std::string& key, const std::string& value) { os_ << key << '=' << value << '\n'; }
  void put(const std::string& key, const char* value) { put(key, std::string(value)); }
  void put(const std::string& key, double value) { put(key, format_double(value)); }
  void put(const std::string& key, std::size_t value) { put(key, std::to_string(value)); }
  void put(const std::string& key, int value) { put(key, std::to_string(value)); }
  void put(const std::string& key, bool value) { put(key, value ? "true" : "false"); }
  void put(const std::string& key, const Vector& value) {
    std::string s;
    for (int i = 0; i < value.size(); ++i) s += (i ? " " : "") + format_double(value(i));
    put(key, s);
  }
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
};

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << text;
}

void emit(const CommandOptions& options, const std::string& command, const Report& report, std::ostream& out) {
  write_text(options.out / (command + "_report.txt"), report.str());
  out << report.str();
}

std::uint64_t require_seed(const CommandOptions& options, const Scenario& s) {
  if (options.seed) return *options.seed;
  if (auto seed = s.seed()) return *seed;
  throw InputError("this command is stochastic: pass --seed or set 'seed' in the scenario");
}

void prepare_out(const CommandOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(options.out, ec);
  if (ec) throw InputError("cannot create output directory " + options.out.string());
}

Vector require_dimension(Vector v, int n, const std::string& what) {
  if (v.size() != n) throw InputError("'" + what + "' must have " + std::to_string(n) + " coordinates");
  return v;
}

std::vector<double> eps_list(const CommandOptions& options, const YAML::Node& section) {
  if (!options.eps_list.empty()) return options.eps_list;
  if (section["eps_list"]) return read_doubles(section["eps_list"], "eps_list");
  return {};
}

SampledCurve read_curve(const Scenario& s, const YAML::Node& node) {
  if (!node) throw InputError("missing 'curve'");
  if (node.IsScalar()) {
    try {
      return fixtures::named_curve(node.as<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (node["csv"]) return read_curve_csv(s.resolve(node["csv"].as<std::string>()));
  if (node["samples"]) {
    SampledCurve curve;
    for (std::size_t i = 0; i < node["samples"].size(); ++i) {
      const Vector row = read_vector(node["samples"][i], "curve.samples");
      if (row.size() < 2) throw InputError("curve samples need a time and at least one coordinate");
      if (curve.empty()) curve = SampledCurve(static_cast<int>(row.size() - 1));
      if (row.size() - 1 != curve.dimension()) throw MalformedCurveError("curve samples differ in length");
      curve.push_back(row(0), row.tail(row.size() - 1));
    }
    return curve;
  }
  throw InputError("'curve' must be a fixture name, {csv: path} or {samples: [...]}");
}

/// Lipschitz constant from the distribution, the scenario, or a grid estimate.
Distribution with_lipschitz(const Distribution& dist, const Scenario& s, const YAML::Node& section) {
  if (dist.lipschitz_constant()) return dist;
  if (section["lipschitz"]) return dist.with_lipschitz_constant(read_double(section["lipschitz"], "lipschitz"));
  return dist.with_lipschitz_constant(estimate_distribution_lipschitz(dist, s.require_domain(dist.dimension())));
}

void put_certificate(Report& r, const std::string& prefix, const SmoothingCertificate& c) {
  r.put(prefix + "epsilon", c.epsilon);
  r.put(prefix + "windows", c.windows);
  r.put(prefix + "endpoint_error", c.endpoint_error);
  r.put(prefix + "predicted_error_bound", c.predicted_error_bound);
  r.put(prefix + "length_input", c.length_input);
  r.put(prefix + "length_output", c.length_output);
  r.put(prefix + "delta", c.delta);
  r.put(prefix + "lipschitz_constant", c.lipschitz_constant);
  r.put(prefix + "alpha", c.alpha);
  r.put(prefix + "beta", c.beta);
  r.put(prefix + "speed_cap", c.speed_cap);
  r.put(prefix + "reparametrized", c.reparametrized);
}

DiffeoFamily read_family(const YAML::Node& node) {
  if (!node) throw InputError("verify needs a 'family'");
  try {
    if (node.IsScalar()) return families::parse(node.as<std::string>());
    std::vector<std::string> components;
    for (const auto& c : node["components"]) components.push_back(c.as<std::string>());
    DiffeoFamily f = families::polynomial(node["name"] ? node["name"].as<std::string>() : "custom", components);
    if (node["jacobian_step"]) f = f.with_jacobian_step(read_double(node["jacobian_step"], "family.jacobian_step"));
    return f;
  } catch (const YAML::Exception& e) {
    throw InputError(std::string("bad family: ") + e.what());
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad family: ") + e.what());
  }
}

}  // namespace

int cmd_ccdist(const CommandOptions& options, std::ostream& out) {
  const Scenario s = Scenario::load(options.scenario);
  const YAML::Node sec = s.section("ccdist");
  const Distribution dist = s.distribution();
  const FinslerNorm norm = s.norm(dist);
  const std::uint64_t seed = require_seed(options, s);
  const CCSolverConfig cfg = read_solver(sec["solver"], seed);
  const Vector p = require_dimension(read_vector(sec["from"], "ccdist.from"), dist.dimension(), "ccdist.from");
  const Vector q = require_dimension(read_vector(sec["to"], "ccdist.to"), dist.dimension(), "ccdist.to");
  prepare_out(options);

  const double lower = cc_chord_lower(p, q, norm);
  const CCUpperResult upper = cc_distance_upper(p, q, dist, norm, cfg);
  write_curve_csv(options.out / "ccdist_path.csv", upper.path);

  Report r;
  r.put("command", "ccdist");
  r.put("distribution", dist.name());
  r.put("norm", norm.name());
  r.put("seed", std::to_string(seed));
  r.put("from", p);
  r.put("to", q);
  r.put("lower", lower);
  r.put("upper", upper.value);
  r.put("path_length", upper.path_length);
  r.put("endpoint_gap", upper.endpoint_gap);
  r.put("restart", upper.restart);
  r.put("restarts_run", upper.restarts_run);
  r.put("path_csv", "ccdist_path.csv");
  emit(options, "ccdist", r, out);
  return lower <= upper.value * (1.0 + 1e-12) || norm.kind() != FinslerNorm::Kind::euclidean ? kExitOk
                                                                                            : kExitInvariant;
}

int cmd_smooth(const CommandOptions& options, std::ostream& out) {
  const Scenario s = Scenario::load(options.scenario);
  const YAML::Node sec = s.section("smooth");
  const Distribution dist = with_lipschitz(s.distribution(), s, sec);
  const SampledCurve eta = read_curve(s, sec["curve"]);
  SmoothingConfig cfg;
  cfg.flow = read_flow(sec, s.domain(dist.dimension()));
  if (sec["horizontality_tol"]) cfg.horizontality_tol = read_double(sec["horizontality_tol"], "horizontality_tol");
  std::vector<double> eps = eps_list(options, sec);
  const bool sweep = !eps.empty();
  if (!sweep) eps.push_back(sec["epsilon"] ? read_double(sec["epsilon"], "smooth.epsilon") : cfg.epsilon);
  prepare_out(options);

  Report r;
  r.put("command", "smooth");
  r.put("distribution", dist.name());
  std::string table = "epsilon,windows,endpoint_error,predicted_error_bound,delta,length_output\n";
  bool monotone = true;
  double previous = INFINITY;
  SmoothingResult last;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    cfg.epsilon = eps[i];
    try {
      last = smooth_horizontal_approximation(eta, dist, cfg);
    } catch (const NotHorizontalError& e) {
      const std::filesystem::path path = options.out / "horizontality_report.txt";
      Report h;
      h.put("max_deviation", e.report().max_deviation);
      h.put("tolerance", cfg.horizontality_tol);
      h.put("offending_segments", e.report().offending_segments.size());
      std::string list;
      for (std::size_t k = 0; k < e.report().offending_segments.size(); ++k) {
        list += (k ? " " : "") + std::to_string(e.report().offending_segments[k]);
      }
      h.put("segments", list);
      write_text(path, h.str());
      throw InputError(std::string(e.what()) + "; report written to " + path.string());
    } catch (const SmoothingAbortedError& e) {
      write_curve_csv(options.out / "sigma_partial.csv", e.partial().sigma);
      throw;
    }
    const SmoothingCertificate& c = last.certificate;
    table += fmt::format("{},{},{},{},{},{}\n", format_double(c.epsilon), c.windows, format_double(c.endpoint_error),
                         format_double(c.predicted_error_bound), format_double(c.delta),
                         format_double(c.length_output));
    if (c.endpoint_error > previous) monotone = false;
    previous = c.endpoint_error;
  }
  write_curve_csv(options.out / "sigma.csv", last.sigma);
  put_certificate(r, "", last.certificate);
  r.put("sigma_csv", "sigma.csv");
  if (sweep) {
    write_text(options.out / "smooth_sweep.csv", table);
    r.put("sweep_csv", "smooth_sweep.csv");
    r.put("sweep_monotone", monotone);
  }
  emit(options, "smooth", r, out);
  return kExitOk;
}

int cmd_zigzag(const CommandOptions& options, std::ostream& out) {
  const Scenario s = Scenario::load(options.scenario);
  const YAML::Node sec = s.section("zigzag");
  const Distribution dist = s.distribution();
  const FlowConfig flow = read_flow(sec, s.domain(dist.dimension()));
  ZigzagSpec spec;
  spec.base = require_dimension(read_vector(sec["base"], "zigzag.base"), dist.dimension(), "zigzag.base");
  const YAML::Node gens = sec["generators"];
  if (gens && gens.IsScalar() && gens.as<std::string>() == "frame") {
    const Matrix f = dist.frame(spec.base);
    for (int j = 0; j < f.cols(); ++j) spec.generators.push_back(f.col(j));
  } else {
    const Matrix g = read_columns(gens, "zigzag.generators");
    for (int j = 0; j < g.cols(); ++j) spec.generators.push_back(g.col(j));
  }
  spec.coefficients = read_doubles(sec["coefficients"], "zigzag.coefficients");
  if (sec["epsilon"]) spec.epsilon = read_double(sec["epsilon"], "zigzag.epsilon");
  if (sec["duration"]) spec.duration = read_double(sec["duration"], "zigzag.duration");
  const std::vector<double> eps = eps_list(options, sec);
  prepare_out(options);

  const SampledCurve curve = zigzag_curve(spec, dist, flow);
  write_curve_csv(options.out / "zigzag.csv", curve);
  Report r;
  r.put("command", "zigzag");
  r.put("distribution", dist.name());
  r.put("epsilon", spec.epsilon);
  r.put("duration", spec.duration);
  r.put("target_velocity", spec.target_velocity());
  r.put("endpoint", curve.back());
  r.put("curve_csv", "zigzag.csv");
  int code = kExitOk;
  if (!eps.empty()) {
    const ConvergenceReport conv = tangent_convergence_check(spec, dist, eps, flow);
    std::string table = "epsilon,deviation\n";
    for (std::size_t i = 0; i < conv.epsilons.size(); ++i) {
      table += format_double(conv.epsilons[i]) + "," + format_double(conv.deviations[i]) + "\n";
    }
    write_text(options.out / "zigzag_convergence.csv", table);
    r.put("convergence_csv", "zigzag_convergence.csv");
    r.put("convergence_passed", conv.passed);
    if (!conv.passed) code = kExitInvariant;
  }
  emit(options, "zigzag", r, out);
  return code;
}

int cmd_flow(const CommandOptions& options, std::ostream& out) {
  const Scenario s = Scenario::load(options.scenario);
  const YAML::Node sec = s.section("flow");
  const Distribution dist = with_lipschitz(s.distribution(), s, sec);
  const FlowConfig cfg = read_flow(sec, s.domain(dist.dimension()));
  const Vector p = require_dimension(read_vector(sec["point"], "flow.point"), dist.dimension(), "flow.point");
  const Vector v = require_dimension(read_vector(sec["velocity"], "flow.velocity"), dist.dimension(), "flow.velocity");
  const double duration = read_double(sec["duration"], "flow.duration");
  prepare_out(options);

  const FlowResult res = integrate_projected_field(p, v, duration, dist, cfg);
  write_curve_csv(options.out / "flow.csv", res.curve);
  const DeviationReport dev = deviation_certificate(res.curve, p, v, dist, *dist.lipschitz_constant());
  const SpeedReport speed = speed_certificate(res.curve, v);
  Report r;
  r.put("command", "flow");
  r.put("distribution", dist.name());
  r.put("point", p);
  r.put("velocity", v);
  r.put("duration", duration);
  r.put("projected_velocity", project_onto_distribution(p, v, dist));
  r.put("endpoint", res.curve.back());
  r.put("exited_domain", res.exited_domain);
  if (res.exit_time) r.put("exit_time", *res.exit_time);
  r.put("lipschitz_constant", *dist.lipschitz_constant());
  r.put("deviation_constant", dev.constant);
  r.put("deviation_threshold", dev.threshold);
  r.put("deviation_passed", dev.passed);
  r.put("max_chord_ratio", speed.max_chord_ratio);
  r.put("length_ratio", speed.length_ratio);
  r.put("speed_passed", speed.passed);
  r.put("curve_csv", "flow.csv");
  emit(options, "flow", r, out);
  return dev.passed && speed.passed ? kExitOk : kExitInvariant;
}

int cmd_verify(const CommandOptions& options, std::ostream& out) {
  const Scenario s = Scenario::load(options.scenario);
  const YAML::Node sec = s.section("verify");
  const DiffeoFamily family = read_family(sec["family"]);
  const Domain domain = s.require_domain(family.dimension());
  const std::uint64_t seed = require_seed(options, s);
  const CCSolverConfig solver = read_solver(sec["solver"], seed);
  const std::string norm_name = s.root()["norm"] ? s.root()["norm"].as<std::string>() : "euclidean";
  if (norm_name != "euclidean" && norm_name != "frame") throw InputError("unknown norm '" + norm_name + "'");

  std::optional<Distribution> pushed;
  if (const YAML::Node pf = sec["pushforward"]) pushed = push_forward_distribution(family, read_columns(pf["frame"], "pushforward.frame"));
  const auto oracle = [&](const std::string& spec) -> MetricOracle {
    if (spec == "cc:pushforward") {
      if (!pushed) throw InputError("cc:pushforward needs a 'pushforward' section");
      return MetricOracle::carnot_caratheodory(
          *pushed, norm_name == "frame" ? FinslerNorm::frame(*pushed) : FinslerNorm::euclidean(), solver);
    }
    try {
      if (norm_name == "frame" && spec.starts_with("cc:")) {
        const Distribution d = distributions::parse(spec.substr(3));
        return MetricOracle::carnot_caratheodory(d, FinslerNorm::frame(d), solver);
      }
      return parse_metric(spec, FinslerNorm::euclidean(), solver);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  };
  const MetricOracle d = oracle(sec["metric"] ? sec["metric"].as<std::string>() : "euclidean");

  HypothesisSampling sampling;
  sampling.seed = seed;
  if (const YAML::Node n = sec["sampling"]) {
    if (n["parameters"]) sampling.parameters = n["parameters"].as<int>();
    if (n["pairs_per_parameter"]) sampling.pairs_per_parameter = n["pairs_per_parameter"].as<int>();
    if (n["metric_samples"]) sampling.metric_samples = n["metric_samples"].as<int>();
    if (n["min_radius"]) sampling.min_radius = read_double(n["min_radius"], "sampling.min_radius");
  }
  HypothesisThresholds thresholds;
  if (const YAML::Node n = sec["thresholds"]) {
    if (n["max_k"]) thresholds.max_k = read_double(n["max_k"], "thresholds.max_k");
    if (n["small_scale"]) thresholds.small_scale = read_double(n["small_scale"], "thresholds.small_scale");
    if (n["max_eta"]) thresholds.max_eta = read_double(n["max_eta"], "thresholds.max_eta");
    if (n["max_df0_gap"]) thresholds.max_df0_gap = read_double(n["max_df0_gap"], "thresholds.max_df0_gap");
    if (n["max_omega_ratio"]) thresholds.max_omega_ratio = read_double(n["max_omega_ratio"], "thresholds.max_omega_ratio");
  }
  prepare_out(options);

  Report r;
  r.put("command", "verify");
  r.put("family", family.name());
  r.put("metric", d.name());
  r.put("seed", std::to_string(seed));
  bool all = true;

  const HypothesisReport h = check_family_hypotheses(family, d, domain, sampling, thresholds);
  r.put("k_emp", h.k_emp);
  r.put("k_euclidean", h.k_euclidean);
  r.put("k_metric", h.k_metric);
  r.put("samples_skipped", h.skipped);
  r.put("metric_evaluated", h.metric_evaluated);
  r.put("metric_skipped", h.metric_skipped);
  r.put("jacobian", h.analytic_jacobian ? "analytic" : "central-difference");
  r.put("jacobian_step", h.jacobian_step);
  r.put("eta_small", h.eta_small);
  r.put("df0_small", h.df0_small);
  r.put("omega_ratio_small", h.omega_ratio_small);
  r.put("bilipschitz_ok", h.bilipschitz_ok);
  r.put("eta_ok", h.eta_ok);
  r.put("df0_ok", h.df0_ok);
  r.put("omega_ok", h.omega_ok);
  r.put("hypotheses_passed", h.passed());
  all = all && h.passed();
  std::string samples = "kind,scale,value\n";
  for (const auto& [kind, list] : {std::pair{"eta", &h.eta_samples}, std::pair{"df0", &h.df0_continuity},
                                   std::pair{"omega", &h.omega_samples}}) {
    for (const ModulusSample& m : *list) samples += fmt::format("{},{},{}\n", kind, format_double(m.scale), format_double(m.value));
  }
  write_text(options.out / "verify_samples.csv", samples);
  r.put("samples_csv", "verify_samples.csv");

  if (const YAML::Node n = sec["distortion"]; !n || !n.IsScalar() || n.as<std::string>() != "off") {
    DistortionSampling ds;
    ds.seed = seed;
    if (n && n.IsMap()) {
      if (n["radii"]) ds.radii = n["radii"].as<int>();
      if (n["min_radius"]) ds.min_radius = read_double(n["min_radius"], "distortion.min_radius");
      if (n["parameters"]) ds.parameters = n["parameters"].as<int>();
      if (n["directions"]) ds.directions = n["directions"].as<int>();
    }
    const OmegaEnvelope env = distortion_modulus(family, domain, ds);
    std::string radii;
    std::string values;
    for (std::size_t i = 0; i < env.radii.size(); ++i) {
      radii += (i ? " " : "") + format_double(env.radii[i]);
      values += (i ? " " : "") + format_double(env.envelope[i]);
    }
    r.put("omega_radii", radii);
    r.put("omega_envelope", values);
    r.put("omega_advisory", env.advisory);
    r.put("omega_passed", env.passed);
    if (!env.advisory) all = all && env.passed;
  }

  if (pushed) {
    const YAML::Node pf = sec["pushforward"];
    if (pf["compare_to"]) {
      Distribution known = distributions::parse(pf["compare_to"].as<std::string>());
      const int count = pf["samples"] ? pf["samples"].as<int>() : 50;
      const double tol = pf["max_distance"] ? read_double(pf["max_distance"], "pushforward.max_distance") : 1e-6;
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> u;
      double worst = 0.0;
      for (int i = 0; i < count; ++i) {
        Vector x(domain.dimension());
        for (int k = 0; k < x.size(); ++k) x(k) = domain.lower()(k) + u(rng) * (domain.upper()(k) - domain.lower()(k));
        worst = std::max(worst, subspace_distance(pushed->orthonormal_frame(x), known.orthonormal_frame(x)));
      }
      r.put("pushforward_distance", worst);
      r.put("pushforward_passed", worst <= tol);
      all = all && worst <= tol;
    }
    const Distribution estimated = pushed->with_lipschitz_constant(estimate_distribution_lipschitz(*pushed, domain));
    r.put("pushforward_lipschitz", *estimated.lipschitz_constant());
  }

  if (const YAML::Node c = sec["compare"]) {
    const MetricOracle a = oracle(c["metric_a"].as<std::string>());
    const MetricOracle b = oracle(c["metric_b"].as<std::string>());
    const int pairs = c["pairs"] ? c["pairs"].as<int>() : 30;
    const double min_sep = c["min_sep"] ? read_double(c["min_sep"], "compare.min_sep") : 0.3;
    const BiLipReport bl = compare_metrics(a, b, domain, pairs, min_sep, seed);
    r.put("compare_metrics", a.name() + " vs " + b.name());
    r.put("l_emp", bl.l_emp);
    r.put("compare_pairs", bl.ratios.size());
    r.put("compare_skipped", bl.skipped);
    r.put("compare_min_separation", bl.min_separation);
    if (c["max_l"]) {
      const bool ok = bl.l_emp <= read_double(c["max_l"], "compare.max_l");
      r.put("compare_passed", ok);
      all = all && ok;
    }
  }

  if (const YAML::Node c = sec["chain"]) {
    const Vector step = require_dimension(read_vector(c["step"], "chain.step"), family.dimension(), "chain.step");
    const ChainReport ch = chain_transport(family, step, read_double(c["radius"], "chain.radius"), d, h.k_emp);
    r.put("chain_steps", ch.steps);
    r.put("chain_step_bound", ch.step_bound);
    r.put("chain_length_bound", ch.length_bound);
    r.put("chain_endpoint", ch.endpoints.back());
    r.put("chain_passed", ch.passed);
    all = all && ch.passed;
  }

  r.put("passed", all);
  emit(options, "verify", r, out);
  return all ? kExitOk : kExitInvariant;
}

int cmd_fixtures_regenerate(const CommandOptions& options, std::ostream& out) {
  prepare_out(options);
  write_curve_csv(options.out / "heisenberg_circle_lift.csv", fixtures::heisenberg_circle_lift());
  write_curve_csv(options.out / "quarter_circle.csv", fixtures::quarter_circle(1000));
  out << "wrote heisenberg_circle_lift.csv\nwrote quarter_circle.csv\n";
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Carnot-Caratheodory geometry toolkit"};
  app.require_subcommand(1);
  CommandOptions options;
  std::string scenario;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::vector<double> eps;

  const auto common = [&](CLI::App* cmd, bool needs_scenario) {
    auto* opt = cmd->add_option("--scenario", scenario, "Scenario file (YAML)");
    if (needs_scenario) opt->required();
    cmd->add_option("--seed", seed, "Seed for stochastic commands");
    cmd->add_option("--out", out_dir, "Output directory");
    cmd->add_option("--eps-list", eps, "Comma-separated step list")->delimiter(',');
  };
  CLI::App* ccdist = app.add_subcommand("ccdist", "CC distance interval between two points");
  CLI::App* smooth = app.add_subcommand("smooth", "Piecewise-smooth approximation of a horizontal curve");
  CLI::App* zigzag = app.add_subcommand("zigzag", "Zigzag curve and tangent convergence table");
  CLI::App* verify = app.add_subcommand("verify", "Check a family of maps against the homogeneity hypotheses");
  CLI::App* flow = app.add_subcommand("flow", "Integral curve of a projected constant vector");
  CLI::App* fixtures = app.add_subcommand("fixtures", "Fixture management");
  fixtures->require_subcommand(1);
  CLI::App* regenerate = fixtures->add_subcommand("regenerate", "Rewrite the curve fixtures");
  for (CLI::App* cmd : {ccdist, smooth, zigzag, verify, flow}) common(cmd, true);
  common(regenerate, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  options.scenario = scenario;
  options.out = out_dir;
  options.eps_list = eps;
  for (CLI::App* cmd : {ccdist, smooth, zigzag, verify, flow, regenerate}) {
    if (cmd->count("--seed") > 0) options.seed = seed;
  }

  try {
    if (*ccdist) return cmd_ccdist(options, out);
    if (*smooth) return cmd_smooth(options, out);
    if (*zigzag) return cmd_zigzag(options, out);
    if (*verify) return cmd_verify(options, out);
    if (*flow) return cmd_flow(options, out);
    return cmd_fixtures_regenerate(options, out);
  } catch (const UnreachableError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const StagnationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const SmoothingAbortedError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const CompareAbortedError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const MalformedCurveError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DegenerateFrameError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const YAML::Exception& e) {
    err << "error: scenario: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvariant;
  }
}

}  // namespace ccgeom::cli
