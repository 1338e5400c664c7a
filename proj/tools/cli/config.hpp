// Copyright 2026 The kansa-tps Authors
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
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kansa/geometry.hpp"

namespace kansa::cli {

/// Boundary given either by built-in name (disk, ellipse:a:b, star3), by a
/// path to a JSON coefficient file, or inline coefficients.
struct DomainSpec {
  std::string name = "disk";
  std::optional<FourierSeries> fourier;

  AnalyticCurve curve() const;
  /// Short label used in output metadata.
  std::string label() const;
};

/// Effective settings of one run. Defaults, then the JSON config file, then
/// command-line flags.
struct RunConfig {
  DomainSpec domain;
  int nu = 2;
  std::size_t n = 25;
  std::size_t m = 15;
  std::string policy = "alternate";
  double p_interior = 0.5;
  std::string interior_density = "uniform";
  std::string boundary_density = "arclength";
  std::string manufactured = "quadratic";
  std::optional<std::string> f;
  std::optional<std::string> g;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::size_t threads = 1;
  std::string out = ".";
  std::vector<std::size_t> ladder = {40, 80, 160};
  std::size_t seeds = 20;
  std::size_t grid = 50;
  double boundary_fraction = 0.4;
  bool timing = false;
  bool export_matrix = false;
};

/// Throws ConfigError on unknown keys or ill-typed values.
void merge_json(RunConfig& cfg, const nlohmann::json& j);
RunConfig load_config(const std::string& path, RunConfig base = {});
nlohmann::json to_json(const RunConfig& cfg);

FourierSeries fourier_from_json(const nlohmann::json& j);
nlohmann::json fourier_to_json(const FourierSeries& s);

}  // namespace kansa::cli
