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

#include "kansa/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "kansa/errors.hpp"

namespace kansa {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double coeff(const std::vector<double>& v, std::size_t k) { return k < v.size() ? v[k] : 0.0; }

double reduce_angle(double t) {
  double r = std::fmod(t, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

double orientation(Point2 a, Point2 b, Point2 c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool on_segment(Point2 a, Point2 b, Point2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_intersect(Point2 p1, Point2 p2, Point2 q1, Point2 q2) {
  const double d1 = orientation(q1, q2, p1);
  const double d2 = orientation(q1, q2, p2);
  const double d3 = orientation(p1, p2, q1);
  const double d4 = orientation(p1, p2, q2);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  return (d1 == 0 && on_segment(q1, q2, p1)) || (d2 == 0 && on_segment(q1, q2, p2)) ||
         (d3 == 0 && on_segment(p1, p2, q1)) || (d4 == 0 && on_segment(p1, p2, q2));
}

double segment_distance(Point2 a, Point2 b, Point2 p) {
  const Point2 ab = b - a;
  const double len2 = ab.x * ab.x + ab.y * ab.y;
  double s = 0.0;
  if (len2 > 0.0) {
    s = std::clamp(((p.x - a.x) * ab.x + (p.y - a.y) * ab.y) / len2, 0.0, 1.0);
  }
  return distance(p, a + s * ab);
}

std::vector<Point2> sample_polyline(const FourierSeries& s, std::size_t count) {
  std::vector<Point2> pts(count);
  for (std::size_t i = 0; i < count; ++i) {
    pts[i] = s.eval(kTwoPi * static_cast<double>(i) / static_cast<double>(count));
  }
  return pts;
}

// Sweep over segments sorted by min x; adjacent segments share a vertex and
// are skipped.
bool polyline_is_simple(const std::vector<Point2>& pts) {
  const std::size_t m = pts.size();
  struct Seg {
    double lo, hi;
    std::size_t i;
  };
  std::vector<Seg> segs(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 a = pts[i];
    const Point2 b = pts[(i + 1) % m];
    segs[i] = {std::min(a.x, b.x), std::max(a.x, b.x), i};
  }
  std::sort(segs.begin(), segs.end(), [](const Seg& a, const Seg& b) { return a.lo < b.lo; });
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m && segs[v].lo <= segs[u].hi; ++v) {
      const std::size_t i = segs[u].i;
      const std::size_t j = segs[v].i;
      const std::size_t gap = i > j ? i - j : j - i;
      if (gap == 1 || gap == m - 1) continue;
      if (segments_intersect(pts[i], pts[(i + 1) % m], pts[j], pts[(j + 1) % m])) return false;
    }
  }
  return true;
}

// 16-point Gauss-Legendre rule on [-1, 1], nodes by Newton iteration.
struct GaussRule {
  static constexpr int kOrder = 16;
  std::array<double, kOrder> nodes{};
  std::array<double, kOrder> weights{};

  GaussRule() {
    for (int i = 0; i < kOrder; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (kOrder + 0.5));
      double dp = 1.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= kOrder; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = kOrder * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      nodes[i] = x;
      weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
};

const GaussRule& gauss_rule() {
  static const GaussRule rule;
  return rule;
}

}  // namespace

std::size_t FourierSeries::degree() const {
  const std::size_t n = std::max({x_cos.size(), x_sin.size(), y_cos.size(), y_sin.size()});
  return n == 0 ? 0 : n - 1;
}

Point2 FourierSeries::eval(double t) const {
  t = reduce_angle(t);
  Point2 p{coeff(x_cos, 0), coeff(y_cos, 0)};
  const std::size_t deg = degree();
  for (std::size_t k = 1; k <= deg; ++k) {
    const double c = std::cos(static_cast<double>(k) * t);
    const double s = std::sin(static_cast<double>(k) * t);
    p.x += coeff(x_cos, k) * c + coeff(x_sin, k) * s;
    p.y += coeff(y_cos, k) * c + coeff(y_sin, k) * s;
  }
  return p;
}

Point2 FourierSeries::deriv(double t) const {
  t = reduce_angle(t);
  Point2 v{};
  const std::size_t deg = degree();
  for (std::size_t k = 1; k <= deg; ++k) {
    const double kk = static_cast<double>(k);
    const double c = std::cos(kk * t);
    const double s = std::sin(kk * t);
    v.x += kk * (coeff(x_sin, k) * c - coeff(x_cos, k) * s);
    v.y += kk * (coeff(y_sin, k) * c - coeff(y_cos, k) * s);
  }
  return v;
}

double speed_upper_bound(const FourierSeries& series) {
  double bx = 0.0;
  double by = 0.0;
  const std::size_t deg = series.degree();
  for (std::size_t k = 1; k <= deg; ++k) {
    const double kk = static_cast<double>(k);
    bx += kk * (std::abs(coeff(series.x_cos, k)) + std::abs(coeff(series.x_sin, k)));
    by += kk * (std::abs(coeff(series.y_cos, k)) + std::abs(coeff(series.y_sin, k)));
  }
  return std::sqrt(bx * bx + by * by);
}

AnalyticCurve::AnalyticCurve(FourierSeries series) : series_(std::move(series)) {
  for (const auto* v : {&series_.x_cos, &series_.x_sin, &series_.y_cos, &series_.y_sin}) {
    for (double c : *v) {
      if (!std::isfinite(c)) throw CurveError("curve coefficients must be finite");
    }
  }
  speed_bound_ = speed_upper_bound(series_);

  double min_speed = std::numeric_limits<double>::infinity();
  double max_speed = 0.0;
  for (std::size_t i = 0; i < kValidationSamples; ++i) {
    const double sp = norm(series_.deriv(kTwoPi * static_cast<double>(i) / kValidationSamples));
    min_speed = std::min(min_speed, sp);
    max_speed = std::max(max_speed, sp);
  }
  if (!(max_speed > 0.0) || !(min_speed > 1e-12 * max_speed)) {
    throw CurveError("curve is not regular: velocity vanishes (min speed " +
                     std::to_string(min_speed) + ")");
  }
  if (!polyline_is_simple(sample_polyline(series_, kValidationSamples))) {
    throw CurveError("curve is not simple: validation polyline self-intersects");
  }
}

double arclength(const AnalyticCurve& curve) {
  const GaussRule& rule = gauss_rule();
  auto composite = [&](std::size_t panels) {
    const double h = kTwoPi / static_cast<double>(panels);
    double sum = 0.0;
    for (std::size_t p = 0; p < panels; ++p) {
      const double mid = (static_cast<double>(p) + 0.5) * h;
      double part = 0.0;
      for (int i = 0; i < GaussRule::kOrder; ++i) {
        part += rule.weights[i] * curve.speed(mid + 0.5 * h * rule.nodes[i]);
      }
      sum += 0.5 * h * part;
    }
    return sum;
  };

  constexpr int kMaxRefinements = 16;
  std::size_t panels = 4;
  double previous = composite(panels);
  for (int r = 0; r < kMaxRefinements; ++r) {
    panels *= 2;
    const double current = composite(panels);
    if (std::abs(current - previous) <= 1e-12 * std::abs(current)) return current;
    previous = current;
  }
  throw QuadratureError("arclength quadrature did not converge");
}

AnalyticCurve circle(Point2 center, double radius) {
  return AnalyticCurve(FourierSeries{{center.x, radius}, {0.0, 0.0}, {center.y, 0.0}, {0.0, radius}});
}

AnalyticCurve unit_circle() { return circle({0.0, 0.0}, 1.0); }

AnalyticCurve ellipse(double semi_x, double semi_y) {
  return AnalyticCurve(FourierSeries{{0.0, semi_x}, {0.0, 0.0}, {0.0, 0.0}, {0.0, semi_y}});
}

AnalyticCurve star3() {
  // (1 + e cos 3t)(cos t, sin t) with product-to-sum expansion.
  constexpr double e = 0.25;
  FourierSeries s;
  s.x_cos = {0.0, 1.0, e / 2, 0.0, e / 2};
  s.x_sin = {0.0, 0.0, 0.0, 0.0, 0.0};
  s.y_cos = {0.0, 0.0, 0.0, 0.0, 0.0};
  s.y_sin = {0.0, 1.0, -e / 2, 0.0, e / 2};
  return AnalyticCurve(std::move(s));
}

Domain::Domain(AnalyticCurve boundary, std::size_t polyline_size)
    : boundary_(std::move(boundary)) {
  if (polyline_size < 3) throw CurveError("membership polyline needs at least 3 vertices");
  polyline_ = sample_polyline(boundary_.series(), polyline_size);
  length_ = kansa::arclength(boundary_);

  extent_ = {polyline_[0].x, polyline_[0].x, polyline_[0].y, polyline_[0].y};
  for (const Point2& p : polyline_) {
    extent_.xmin = std::min(extent_.xmin, p.x);
    extent_.xmax = std::max(extent_.xmax, p.x);
    extent_.ymin = std::min(extent_.ymin, p.y);
    extent_.ymax = std::max(extent_.ymax, p.y);
  }
  const double margin = kBoxMargin * std::max(extent_.width(), extent_.height());
  box_ = {extent_.xmin - margin, extent_.xmax + margin, extent_.ymin - margin,
          extent_.ymax + margin};

  double d2 = 0.0;
  for (std::size_t i = 0; i < polyline_.size(); ++i) {
    for (std::size_t j = i + 1; j < polyline_.size(); ++j) {
      const double dx = polyline_[i].x - polyline_[j].x;
      const double dy = polyline_[i].y - polyline_[j].y;
      d2 = std::max(d2, dx * dx + dy * dy);
    }
  }
  diameter_ = std::sqrt(d2);
  band_ = kAmbiguityFactor * diameter_;

  const std::size_t m = polyline_.size();

  rows_ = std::max<std::size_t>(16, m / 16);
  row_segments_.assign(rows_, {});
  const double row_h = extent_.height() / static_cast<double>(rows_);
  auto row_of = [&](double y) {
    const double r = std::floor((y - extent_.ymin) / row_h);
    return static_cast<std::size_t>(std::clamp(r, 0.0, static_cast<double>(rows_ - 1)));
  };

  cells_ = std::max<std::size_t>(8, static_cast<std::size_t>(std::sqrt(static_cast<double>(m))));
  cell_segments_.assign(cells_ * cells_, {});
  cell_box_ = {extent_.xmin - band_, extent_.xmax + band_, extent_.ymin - band_, extent_.ymax + band_};
  const double cw = cell_box_.width() / static_cast<double>(cells_);
  const double ch = cell_box_.height() / static_cast<double>(cells_);
  auto cell_index = [&](double v, double lo, double size) {
    const double c = std::floor((v - lo) / size);
    return static_cast<std::size_t>(std::clamp(c, 0.0, static_cast<double>(cells_ - 1)));
  };

  for (std::size_t i = 0; i < m; ++i) {
    const Point2 a = polyline_[i];
    const Point2 b = polyline_[(i + 1) % m];
    for (std::size_t r = row_of(std::min(a.y, b.y)); r <= row_of(std::max(a.y, b.y)); ++r) {
      row_segments_[r].push_back(i);
    }
    const std::size_t cx0 = cell_index(std::min(a.x, b.x) - band_, cell_box_.xmin, cw);
    const std::size_t cx1 = cell_index(std::max(a.x, b.x) + band_, cell_box_.xmin, cw);
    const std::size_t cy0 = cell_index(std::min(a.y, b.y) - band_, cell_box_.ymin, ch);
    const std::size_t cy1 = cell_index(std::max(a.y, b.y) + band_, cell_box_.ymin, ch);
    for (std::size_t cy = cy0; cy <= cy1; ++cy) {
      for (std::size_t cx = cx0; cx <= cx1; ++cx) cell_segments_[cy * cells_ + cx].push_back(i);
    }
  }
}

bool Domain::near_polyline(Point2 p) const {
  if (p.x < cell_box_.xmin || p.x > cell_box_.xmax || p.y < cell_box_.ymin || p.y > cell_box_.ymax) {
    return false;
  }
  const double cw = cell_box_.width() / static_cast<double>(cells_);
  const double ch = cell_box_.height() / static_cast<double>(cells_);
  const auto cx = static_cast<std::size_t>(
      std::clamp(std::floor((p.x - cell_box_.xmin) / cw), 0.0, static_cast<double>(cells_ - 1)));
  const auto cy = static_cast<std::size_t>(
      std::clamp(std::floor((p.y - cell_box_.ymin) / ch), 0.0, static_cast<double>(cells_ - 1)));
  const std::size_t m = polyline_.size();
  for (std::size_t i : cell_segments_[cy * cells_ + cx]) {
    if (segment_distance(polyline_[i], polyline_[(i + 1) % m], p) <= band_) return true;
  }
  return false;
}

bool Domain::crossing_parity(Point2 p) const {
  if (p.y < extent_.ymin || p.y > extent_.ymax) return false;
  const double row_h = extent_.height() / static_cast<double>(rows_);
  const auto r = static_cast<std::size_t>(
      std::clamp(std::floor((p.y - extent_.ymin) / row_h), 0.0, static_cast<double>(rows_ - 1)));
  const std::size_t m = polyline_.size();
  bool inside = false;
  for (std::size_t i : row_segments_[r]) {
    const Point2 a = polyline_[i];
    const Point2 b = polyline_[(i + 1) % m];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

Membership Domain::classify(Point2 p) const {
  if (!is_finite(p)) return Membership::kOutside;
  if (near_polyline(p)) return Membership::kAmbiguous;
  return crossing_parity(p) ? Membership::kInside : Membership::kOutside;
}

}  // namespace kansa
