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

#include "config.hpp"

#include <charconv>
#include <fstream>
#include <set>

#include "kansa/errors.hpp"

namespace kansa::cli {
namespace {

using nlohmann::json;

double parse_number(const std::string& s, const std::string& what) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) throw ConfigError("invalid " + what + " '" + s + "'");
  return v;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
}

template <class T>
T get(const json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config key '" + key + "' has the wrong type");
  }
}

}  // namespace

FourierSeries fourier_from_json(const json& j) {
  static const std::set<std::string> keys = {"x_cos", "x_sin", "y_cos", "y_sin"};
  if (!j.is_object()) throw ConfigError("domain coefficients must be a JSON object");
  FourierSeries s;
  for (const auto& [key, value] : j.items()) {
    if (!keys.contains(key)) throw ConfigError("unknown domain key '" + key + "'");
    auto v = get<std::vector<double>>(value, key);
    if (key == "x_cos") s.x_cos = std::move(v);
    if (key == "x_sin") s.x_sin = std::move(v);
    if (key == "y_cos") s.y_cos = std::move(v);
    if (key == "y_sin") s.y_sin = std::move(v);
  }
  return s;
}

json fourier_to_json(const FourierSeries& s) {
  return json{{"x_cos", s.x_cos}, {"x_sin", s.x_sin}, {"y_cos", s.y_cos}, {"y_sin", s.y_sin}};
}

AnalyticCurve DomainSpec::curve() const {
  if (fourier) return AnalyticCurve(*fourier);
  if (name == "disk") return unit_circle();
  if (name == "star3") return star3();
  if (name.starts_with("ellipse:")) {
    const std::string rest = name.substr(8);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw ConfigError("expected ellipse:a:b, got '" + name + "'");
    const double a = parse_number(rest.substr(0, colon), "ellipse semi-axis");
    const double b = parse_number(rest.substr(colon + 1), "ellipse semi-axis");
    if (!(a > 0.0 && b > 0.0)) throw ConfigError("ellipse semi-axes must be positive");
    return ellipse(a, b);
  }
  if (name.ends_with(".json")) return AnalyticCurve(fourier_from_json(read_json_file(name)));
  throw ConfigError("unknown domain '" + name + "' (expected disk, ellipse:a:b, star3 or a .json path)");
}

std::string DomainSpec::label() const { return fourier ? "fourier" : name; }

void merge_json(RunConfig& cfg, const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "domain") {
      if (v.is_string()) {
        cfg.domain = {v.get<std::string>(), std::nullopt};
      } else {
        cfg.domain = {"fourier", fourier_from_json(v)};
      }
    } else if (key == "nu") {
      cfg.nu = get<int>(v, key);
    } else if (key == "n") {
      cfg.n = get<std::size_t>(v, key);
    } else if (key == "m") {
      cfg.m = get<std::size_t>(v, key);
    } else if (key == "policy") {
      cfg.policy = get<std::string>(v, key);
    } else if (key == "p_interior") {
      cfg.p_interior = get<double>(v, key);
    } else if (key == "interior_density") {
      cfg.interior_density = get<std::string>(v, key);
    } else if (key == "boundary_density") {
      cfg.boundary_density = get<std::string>(v, key);
    } else if (key == "case") {
      cfg.manufactured = get<std::string>(v, key);
    } else if (key == "f") {
      cfg.f = v.is_null() ? std::nullopt : std::optional(get<std::string>(v, key));
    } else if (key == "g") {
      cfg.g = v.is_null() ? std::nullopt : std::optional(get<std::string>(v, key));
    } else if (key == "seed") {
      cfg.seed = get<std::uint64_t>(v, key);
    } else if (key == "trials") {
      cfg.trials = get<std::size_t>(v, key);
    } else if (key == "threads") {
      cfg.threads = get<std::size_t>(v, key);
    } else if (key == "out") {
      cfg.out = get<std::string>(v, key);
    } else if (key == "ladder") {
      cfg.ladder = get<std::vector<std::size_t>>(v, key);
    } else if (key == "seeds") {
      cfg.seeds = get<std::size_t>(v, key);
    } else if (key == "grid") {
      cfg.grid = get<std::size_t>(v, key);
    } else if (key == "boundary_fraction") {
      cfg.boundary_fraction = get<double>(v, key);
    } else if (key == "timing") {
      cfg.timing = get<bool>(v, key);
    } else if (key == "export_matrix") {
      cfg.export_matrix = get<bool>(v, key);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
}

RunConfig load_config(const std::string& path, RunConfig base) {
  merge_json(base, read_json_file(path));
  return base;
}

json to_json(const RunConfig& cfg) {
  json j;
  j["domain"] = cfg.domain.fourier ? fourier_to_json(*cfg.domain.fourier) : json(cfg.domain.name);
  j["nu"] = cfg.nu;
  j["n"] = cfg.n;
  j["m"] = cfg.m;
  j["policy"] = cfg.policy;
  j["p_interior"] = cfg.p_interior;
  j["interior_density"] = cfg.interior_density;
  j["boundary_density"] = cfg.boundary_density;
  j["case"] = cfg.manufactured;
  j["f"] = cfg.f ? json(*cfg.f) : json(nullptr);
  j["g"] = cfg.g ? json(*cfg.g) : json(nullptr);
  j["seed"] = cfg.seed;
  j["trials"] = cfg.trials;
  j["threads"] = cfg.threads;
  j["out"] = cfg.out;
  j["ladder"] = cfg.ladder;
  j["seeds"] = cfg.seeds;
  j["grid"] = cfg.grid;
  j["boundary_fraction"] = cfg.boundary_fraction;
  j["timing"] = cfg.timing;
  j["export_matrix"] = cfg.export_matrix;
  return j;
}

}  // namespace kansa::cli
