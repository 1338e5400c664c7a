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

#include "kansa/density.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <vector>

#include <fmt/format.h>

#include "kansa/errors.hpp"

namespace kansa {
namespace {

double parse_double(std::string_view s, std::string_view what) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || !std::isfinite(v)) {
    throw DensityError("invalid " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t p = s.find(sep, start);
    parts.push_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
    if (p == std::string_view::npos) return parts;
    start = p + 1;
  }
}

void check_probe(double value, double bound, bool declared, const std::string& name) {
  if (!std::isfinite(value) || value < 0.0) {
    throw DensityError("density " + name + " is negative or non-finite at a probe point (" +
                       fmt::format("{}", value) + ")");
  }
  if (declared && value > bound) {
    throw DensityError("density " + name + " exceeds its declared bound " + fmt::format("{}", bound) +
                       " (probe value " + fmt::format("{}", value) + ")");
  }
}

void finish_bound(std::optional<double>& bound, bool declared, double probed_max, const std::string& name) {
  if (!(probed_max > 0.0)) throw DensityError("density " + name + " vanishes on every probe point");
  if (!declared) bound = kEstimatedBoundFactor * probed_max;
}

}  // namespace

DensitySpec DensitySpec::uniform() {
  DensitySpec d;
  d.kind_ = Kind::kUniform;
  d.bound_ = 1.0;
  d.declared_bound_ = true;
  return d;
}

DensitySpec DensitySpec::gaussian_bump(Point2 center, double width) {
  if (!(width > 0.0) || !is_finite(center)) throw DensityError("gaussian-bump needs a finite center and width > 0");
  DensitySpec d;
  d.kind_ = Kind::kGaussianBump;
  d.center_ = center;
  d.width_ = width;
  d.bound_ = 1.0;
  d.declared_bound_ = true;
  return d;
}

DensitySpec DensitySpec::expression(Expression expr, std::optional<double> bound) {
  if (bound && !(*bound > 0.0 && std::isfinite(*bound))) throw DensityError("density bound must be positive");
  DensitySpec d;
  d.kind_ = Kind::kExpression;
  d.expr_ = std::move(expr);
  d.bound_ = bound;
  d.declared_bound_ = bound.has_value();
  return d;
}

DensitySpec DensitySpec::parse(std::string_view text) {
  if (text == "uniform") return uniform();
  if (text.starts_with("gaussian-bump:")) {
    const auto parts = split(text.substr(14), ':');
    if (parts.size() != 3) throw DensityError("expected gaussian-bump:cx:cy:width, got '" + std::string(text) + "'");
    return gaussian_bump({parse_double(parts[0], "center x"), parse_double(parts[1], "center y")},
                         parse_double(parts[2], "width"));
  }
  if (text.starts_with("expr:")) {
    std::string_view body = text.substr(5);
    std::optional<double> bound;
    if (const auto at = body.rfind('@'); at != std::string_view::npos) {
      bound = parse_double(body.substr(at + 1), "density bound");
      body = body.substr(0, at);
    }
    return expression(Expression::parse(body), bound);
  }
  throw DensityError("unknown density '" + std::string(text) +
                     "' (expected uniform, gaussian-bump:cx:cy:width or expr:<text>[@bound])");
}

std::string DensitySpec::name() const {
  switch (kind_) {
    case Kind::kUniform:
      return "uniform";
    case Kind::kGaussianBump:
      return fmt::format("gaussian-bump:{}:{}:{}", center_.x, center_.y, width_);
    case Kind::kExpression:
      return declared_bound_ ? fmt::format("expr:{}@{}", expr_->source(), *bound_) : "expr:" + expr_->source();
  }
  return {};
}

double DensitySpec::evaluate(const Variables& vars) const {
  switch (kind_) {
    case Kind::kUniform:
      return 1.0;
    case Kind::kGaussianBump: {
      const double dx = vars.x - center_.x;
      const double dy = vars.y - center_.y;
      return std::exp(-(dx * dx + dy * dy) / (2.0 * width_ * width_));
    }
    case Kind::kExpression:
      return expr_->evaluate(vars);
  }
  return 0.0;
}

DensitySpec certify_interior(DensitySpec density, const Domain& domain) {
  const std::string name = density.name();
  const Box& box = domain.bounding_box();
  constexpr std::size_t side = 100;
  static_assert(side * side == kDensityProbes);
  double probed_max = 0.0;
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      const Point2 p{box.xmin + (i + 0.5) * box.width() / side, box.ymin + (j + 0.5) * box.height() / side};
      if (!domain.contains(p)) continue;
      const double v = density.evaluate({p.x, p.y, 0.0});
      check_probe(v, density.bound(), density.declared_bound_, name);
      probed_max = std::max(probed_max, v);
    }
  }
  finish_bound(density.bound_, density.declared_bound_, probed_max, name);
  return density;
}

DensitySpec certify_boundary(DensitySpec density, const AnalyticCurve& curve) {
  const std::string name = density.name();
  double probed_max = 0.0;
  for (std::size_t i = 0; i < kDensityProbes; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / kDensityProbes;
    const Point2 q = curve.eval(t);
    const double v = density.evaluate({q.x, q.y, t});
    check_probe(v, density.bound(), density.declared_bound_, name);
    probed_max = std::max(probed_max, v);
  }
  finish_bound(density.bound_, density.declared_bound_, probed_max, name);
  return density;
}

}  // namespace kansa
