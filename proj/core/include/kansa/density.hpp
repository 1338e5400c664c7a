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

#include <optional>
#include <string>
#include <string_view>

#include "kansa/expression.hpp"
#include "kansa/geometry.hpp"

namespace kansa {

/// Unnormalized sampling density from the built-in catalog, with an upper
/// bound used as the rejection envelope.
///
/// Interior densities are functions of (x, y). Boundary densities are
/// functions of the abscissa t; expressions may also use x, y, bound to
/// gamma(t).
class DensitySpec {
 public:
  enum class Kind { kUniform, kGaussianBump, kExpression };

  static DensitySpec uniform();
  /// exp(-|p - center|^2 / (2 width^2)), bound 1.
  static DensitySpec gaussian_bump(Point2 center, double width);
  /// User expression. Without a declared bound, certification estimates one.
  static DensitySpec expression(Expression expr, std::optional<double> bound = std::nullopt);

  /// Parses "uniform", "gaussian-bump:cx:cy:width" or "expr:<text>[@bound]".
  static DensitySpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  /// Canonical text form accepted by parse().
  std::string name() const;
  double bound() const { return bound_.value_or(0.0); }
  bool has_bound() const { return bound_.has_value(); }

  double evaluate(const Variables& vars) const;

 private:
  friend DensitySpec certify_interior(DensitySpec, const Domain&);
  friend DensitySpec certify_boundary(DensitySpec, const AnalyticCurve&);

  Kind kind_ = Kind::kUniform;
  Point2 center_{};
  double width_ = 1.0;
  std::optional<Expression> expr_;
  std::optional<double> bound_;
  bool declared_bound_ = false;
};

inline constexpr std::size_t kDensityProbes = 10'000;
/// Safety factor applied to the probed maximum when no bound was declared.
inline constexpr double kEstimatedBoundFactor = 1.05;

/// Checks nonnegativity and the bound on a 100x100 probe grid over the
/// domain's bounding box (points inside the domain only). Sets the bound from
/// the probes when none was declared. Throws DensityError.
DensitySpec certify_interior(DensitySpec density, const Domain& domain);

/// Same as certify_interior, on 10^4 equispaced abscissas.
DensitySpec certify_boundary(DensitySpec density, const AnalyticCurve& curve);

}  // namespace kansa
