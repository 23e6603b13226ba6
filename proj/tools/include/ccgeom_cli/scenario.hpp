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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "ccgeom/cc_metric.hpp"
#include "ccgeom/flow.hpp"
#include "ccgeom/geometry.hpp"

namespace ccgeom::cli {

/// Raised for anything wrong with a scenario file or the command line.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A YAML scenario file. Command parameters live under a key named after
/// the command; distribution, norm, domain and seed are shared.
class Scenario {
 public:
  static Scenario load(const std::filesystem::path& path);
  static Scenario from_string(const std::string& text, std::filesystem::path base_dir = ".");

  const YAML::Node& root() const { return root_; }
  /// The section for a command; throws InputError when missing.
  YAML::Node section(const std::string& name) const;
  std::filesystem::path resolve(const std::string& relative) const;

  Distribution distribution() const;
  FinslerNorm norm(const Distribution& dist) const;
  std::optional<Domain> domain(int dimension) const;
  Domain require_domain(int dimension) const;
  std::optional<std::uint64_t> seed() const;

 private:
  YAML::Node root_;
  std::filesystem::path base_dir_;
};

double read_double(const YAML::Node& node, const std::string& what);
Vector read_vector(const YAML::Node& node, const std::string& what);
std::vector<double> read_doubles(const YAML::Node& node, const std::string& what);
/// Columns given as a list of vectors.
Matrix read_columns(const YAML::Node& node, const std::string& what);

CCSolverConfig read_solver(const YAML::Node& node, std::uint64_t seed);
FlowConfig read_flow(const YAML::Node& node, const std::optional<Domain>& domain);

}  // namespace ccgeom::cli
