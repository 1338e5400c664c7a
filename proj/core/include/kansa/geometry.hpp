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

#include <cstddef>
#include <span>
#include <vector>

#include "kansa/point.hpp"

namespace kansa {

/// Truncated Fourier coefficients of a closed plane curve on t in [0, 2pi):
///   x(t) = x_cos[0] + sum_{k>=1} x_cos[k] cos(kt) + x_sin[k] sin(kt)
/// and likewise for y. Arrays are indexed by harmonic; the sine entry at
/// k = 0 has no effect. Arrays of different lengths are zero-padded.
struct FourierSeries {
  std::vector<double> x_cos;
  std::vector<double> x_sin;
  std::vector<double> y_cos;
  std::vector<double> y_sin;

  std::size_t degree() const;
  Point2 eval(double t) const;
  Point2 deriv(double t) const;
};

/// Certified bound on the parametric speed, from coefficient magnitudes:
/// B_x = sum k (|a_k^x| + |b_k^x|), likewise B_y, result sqrt(B_x^2 + B_y^2).
double speed_upper_bound(const FourierSeries& series);

/// Analytic, regular, simple closed curve. Construction validates regularity
/// (min speed on a 4096-sample grid is positive) and checks simplicity of the
/// sampled polyline; violations throw CurveError.
class AnalyticCurve {
 public:
  static constexpr std::size_t kValidationSamples = 4096;

  explicit AnalyticCurve(FourierSeries series);

  const FourierSeries& series() const { return series_; }

  /// gamma(t); t is reduced mod 2pi.
  Point2 eval(double t) const { return series_.eval(t); }
  /// gamma'(t) by term-by-term differentiation.
  Point2 deriv(double t) const { return series_.deriv(t); }
  double speed(double t) const { return norm(deriv(t)); }
  double speed_bound() const { return speed_bound_; }

 private:
  FourierSeries series_;
  double speed_bound_;
};

/// Length of the curve, by composite Gauss-Legendre quadrature refined until
/// two successive estimates agree to 1e-12 relative. Throws QuadratureError.
double arclength(const AnalyticCurve& curve);

// Built-in boundaries.
AnalyticCurve circle(Point2 center, double radius);
AnalyticCurve unit_circle();
AnalyticCurve ellipse(double semi_x, double semi_y);
/// Three-lobed star, polar radius 1 + 0.25 cos(3t).
AnalyticCurve star3();

struct Box {
  double xmin, xmax, ymin, ymax;
  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  double area() const { return width() * height(); }
};

enum class Membership { kInside, kOutside, kAmbiguous };

/// Bounded region enclosed by an AnalyticCurve, with a cached membership
/// polyline and acceleration grids for the point-in-polygon queries.
class Domain {
 public:
  static constexpr std::size_t kDefaultPolylineSize = 4096;
  static constexpr double kAmbiguityFactor = 1e-9;
  static constexpr double kBoxMargin = 1e-6;

  explicit Domain(AnalyticCurve boundary, std::size_t polyline_size = kDefaultPolylineSize);

  const AnalyticCurve& boundary() const { return boundary_; }
  std::span<const Point2> polyline() const { return polyline_; }
  double arclength() const { return length_; }
  /// Largest vertex-to-vertex distance of the polyline.
  double diameter() const { return diameter_; }
  /// Polyline extent inflated by a 1e-6 relative margin.
  const Box& bounding_box() const { return box_; }

  /// Even-odd test against the polyline. Points within 1e-9 * diameter of the
  /// polyline are ambiguous.
  Membership classify(Point2 p) const;
  /// True only for points classified strictly inside.
  bool contains(Point2 p) const { return classify(p) == Membership::kInside; }

 private:
  bool near_polyline(Point2 p) const;
  bool crossing_parity(Point2 p) const;

  AnalyticCurve boundary_;
  std::vector<Point2> polyline_;
  double length_ = 0.0;
  double diameter_ = 0.0;
  double band_ = 0.0;
  Box extent_{};  // tight polyline extent
  Box box_{};

  // Segment i joins polyline_[i] and polyline_[(i + 1) % M].
  std::size_t rows_ = 0;
  std::vector<std::vector<std::size_t>> row_segments_;
  std::size_t cells_ = 0;
  Box cell_box_{};
  std::vector<std::vector<std::size_t>> cell_segments_;
};

}  // namespace kansa
