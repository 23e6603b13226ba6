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

#include "ccgeom_cli/scenario.hpp"

#include <cmath>

#include "ccgeom/distributions.hpp"

namespace ccgeom::cli {

Scenario Scenario::load(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw InputError("scenario file not found: " + path.string());
  Scenario s;
  try {
    s.root_ = YAML::LoadFile(path.string());
  } catch (const YAML::Exception& e) {
    throw InputError("cannot parse " + path.string() + ": " + e.what());
  }
  if (!s.root_.IsMap()) throw InputError("scenario must be a mapping: " + path.string());
  s.base_dir_ = path.parent_path();
  return s;
}

Scenario Scenario::from_string(const std::string& text, std::filesystem::path base_dir) {
  Scenario s;
  try {
    s.root_ = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw InputError(std::string("cannot parse scenario: ") + e.what());
  }
  if (!s.root_.IsMap()) throw InputError("scenario must be a mapping");
  s.base_dir_ = std::move(base_dir);
  return s;
}

YAML::Node Scenario::section(const std::string& name) const {
  YAML::Node node = root_[name];
  if (!node || !node.IsMap()) throw InputError("scenario has no '" + name + "' section");
  return node;
}

std::filesystem::path Scenario::resolve(const std::string& relative) const {
  const std::filesystem::path p(relative);
  return p.is_absolute() ? p : base_dir_ / p;
}

Distribution Scenario::distribution() const {
  const YAML::Node node = root_["distribution"];
  if (!node) throw InputError("scenario needs a 'distribution'");
  try {
    return distributions::parse(node.as<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

FinslerNorm Scenario::norm(const Distribution& dist) const {
  const YAML::Node node = root_["norm"];
  const std::string name = node ? node.as<std::string>() : "euclidean";
  if (name == "euclidean") return FinslerNorm::euclidean();
  if (name == "frame") return FinslerNorm::frame(dist);
  throw InputError("unknown norm '" + name + "' (expected euclidean or frame)");
}

std::optional<Domain> Scenario::domain(int dimension) const {
  const YAML::Node node = root_["domain"];
  if (!node) return std::nullopt;
  std::vector<int> grid;
  if (const YAML::Node g = node["grid"]) {
    if (g.IsSequence()) {
      for (const auto& v : g) grid.push_back(v.as<int>());
    } else {
      grid.assign(static_cast<std::size_t>(dimension), g.as<int>());
    }
  }
  try {
    if (const YAML::Node half = node["cube"]) {
      return Domain::cube(dimension, read_double(half, "domain.cube"), grid.empty() ? 9 : grid.front());
    }
    Domain d(read_vector(node["lower"], "domain.lower"), read_vector(node["upper"], "domain.upper"), grid);
    if (d.dimension() != dimension) throw InputError("domain dimension does not match the distribution");
    return d;
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad domain: ") + e.what());
  }
}

Domain Scenario::require_domain(int dimension) const {
  auto d = domain(dimension);
  if (!d) throw InputError("scenario needs a 'domain'");
  return *d;
}

std::optional<std::uint64_t> Scenario::seed() const {
  const YAML::Node node = root_["seed"];
  if (!node) return std::nullopt;
  try {
    return node.as<std::uint64_t>();
  } catch (const YAML::Exception&) {
    throw InputError("seed must be an unsigned 64-bit integer");
  }
}

double read_double(const YAML::Node& node, const std::string& what) {
  if (!node) throw InputError("missing '" + what + "'");
  try {
    const double v = node.as<double>();
    if (!std::isfinite(v)) throw InputError("'" + what + "' must be finite");
    return v;
  } catch (const YAML::Exception&) {
    throw InputError("'" + what + "' must be a number");
  }
}

std::vector<double> read_doubles(const YAML::Node& node, const std::string& what) {
  if (!node || !node.IsSequence()) throw InputError("'" + what + "' must be a list of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < node.size(); ++i) out.push_back(read_double(node[i], what));
  return out;
}

Vector read_vector(const YAML::Node& node, const std::string& what) {
  const std::vector<double> v = read_doubles(node, what);
  return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Matrix read_columns(const YAML::Node& node, const std::string& what) {
  if (!node || !node.IsSequence() || node.size() == 0) throw InputError("'" + what + "' must be a list of vectors");
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < node.size(); ++i) cols.push_back(read_vector(node[i], what));
  Matrix m(cols.front().size(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i].size() != m.rows()) throw InputError("'" + what + "' vectors differ in length");
    m.col(static_cast<Eigen::Index>(i)) = cols[i];
  }
  return m;
}

CCSolverConfig read_solver(const YAML::Node& node, std::uint64_t seed) {
  CCSolverConfig cfg;
  cfg.seed = seed;
  if (!node) return cfg;
  if (node["segments"]) cfg.segments = node["segments"].as<int>();
  if (node["substeps"]) cfg.substeps = node["substeps"].as<int>();
  if (node["restarts"]) cfg.restarts = node["restarts"].as<int>();
  if (node["max_iterations"]) cfg.max_iterations = node["max_iterations"].as<int>();
  if (node["max_outer_iterations"]) cfg.max_outer_iterations = node["max_outer_iterations"].as<int>();
  if (node["penalty_schedule"]) cfg.penalty_schedule = read_doubles(node["penalty_schedule"], "solver.penalty_schedule");
  if (node["tolerance"]) cfg.tolerance = read_double(node["tolerance"], "solver.tolerance");
  if (node["path_samples_per_segment"]) cfg.path_samples_per_segment = node["path_samples_per_segment"].as<int>();
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad solver config: ") + e.what());
  }
  return cfg;
}

FlowConfig read_flow(const YAML::Node& node, const std::optional<Domain>& domain) {
  FlowConfig cfg;
  cfg.domain = domain;
  if (node && node["step"]) cfg.step = read_double(node["step"], "step");
  if (node && node["max_duration"]) cfg.max_duration = read_double(node["max_duration"], "max_duration");
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad flow config: ") + e.what());
  }
  return cfg;
}

}  // namespace ccgeom::cli
