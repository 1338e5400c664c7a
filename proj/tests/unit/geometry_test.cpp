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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "kansa/errors.hpp"
#include "kansa/geometry.hpp"
#include "oracles.hpp"

namespace kansa {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(FourierCurve, CircleEvalAndDeriv) {
  const AnalyticCurve c = unit_circle();
  EXPECT_EQ(c.eval(0.0), (Point2{1.0, 0.0}));
  EXPECT_EQ(c.deriv(0.0), (Point2{0.0, 1.0}));
  for (int i = 0; i < 64; ++i) {
    const double t = 0.1 * i;
    EXPECT_NEAR(c.speed(t), 1.0, 1e-15);
  }
}

TEST(FourierCurve, EllipseDerivAtZero) {
  const AnalyticCurve c = ellipse(2.0, 1.0);
  EXPECT_EQ(c.eval(0.0), (Point2{2.0, 0.0}));
  EXPECT_EQ(c.deriv(0.0), (Point2{0.0, 1.0}));
}

TEST(FourierCurve, PeriodicAtRepresentableShifts) {
  for (const AnalyticCurve& c : {unit_circle(), ellipse(2.0, 1.0), star3()}) {
    for (double t : {0.0, 0.25, 0.5, 1.0, 2.0, 3.0}) {
      EXPECT_EQ(c.eval(t), c.eval(t + 2.0 * kPi)) << "t=" << t;
    }
  }
}

TEST(FourierCurve, DerivativeMatchesCentralDifference) {
  const double h = 1e-6;
  for (const AnalyticCurve& c : {unit_circle(), ellipse(2.0, 1.0)}) {
    for (int i = 0; i < 50; ++i) {
      const double t = 0.123 * i;
      const Point2 fd = (1.0 / (2.0 * h)) * (c.eval(t + h) - c.eval(t - h));
      const Point2 d = c.deriv(t);
      EXPECT_LE(norm(fd - d), 1e-6 * norm(d)) << "t=" << t;
    }
  }
}

TEST(SpeedBound, Examples) {
  EXPECT_NEAR(unit_circle().speed_bound(), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(ellipse(2.0, 1.0).speed_bound(), std::sqrt(5.0), 1e-15);
  FourierSeries constant{{1.0}, {}, {2.0}, {}};
  EXPECT_EQ(speed_upper_bound(constant), 0.0);
}

TEST(SpeedBound, DominatesGridSpeed) {
  for (const AnalyticCurve& c : {unit_circle(), ellipse(2.0, 1.0), star3(), circle({5.0, 5.0}, 0.5)}) {
    double max_speed = 0.0;
    for (int i = 0; i < 4096; ++i) max_speed = std::max(max_speed, c.speed(2.0 * kPi * i / 4096.0));
    EXPECT_GE(c.speed_bound(), max_speed);
  }
}

TEST(Arclength, Circles) {
  EXPECT_NEAR(arclength(unit_circle()), 2.0 * kPi, 1e-9);
  for (double r : {0.5, 1.0, 3.0}) {
    const double expected = 2.0 * kPi * r;
    EXPECT_LE(std::abs(arclength(circle({0.3, -0.7}, r)) - expected), 1e-10 * expected);
  }
}

TEST(Arclength, EllipseAgreesWithIndependentQuadrature) {
  const double oracle =
      oracle::integrate([](double t) { return std::sqrt(4.0 * std::sin(t) * std::sin(t) + std::cos(t) * std::cos(t)); },
                        0.0, 2.0 * kPi);
  EXPECT_NEAR(oracle, 9.6884482205, 1e-9);
  EXPECT_NEAR(arclength(ellipse(2.0, 1.0)), oracle, 1e-10 * oracle);
}

TEST(AnalyticCurve, RejectsDegenerateAndSelfIntersecting) {
  EXPECT_THROW(AnalyticCurve(FourierSeries{{1.0}, {}, {2.0}, {}}), CurveError);
  // Figure eight (sin t, sin 2t) crosses itself at the origin.
  EXPECT_THROW(AnalyticCurve(FourierSeries{{0.0}, {0.0, 1.0}, {0.0}, {0.0, 0.0, 1.0}}), CurveError);
  EXPECT_THROW(AnalyticCurve(FourierSeries{{0.0, NAN}, {}, {}, {0.0, 1.0}}), CurveError);
}

TEST(Domain, ContainsExamples) {
  const Domain disk(unit_circle());
  EXPECT_TRUE(disk.contains({0.0, 0.0}));
  EXPECT_FALSE(disk.contains({2.0, 0.0}));
  EXPECT_FALSE(disk.contains({0.999999999, 0.0}));
  EXPECT_EQ(disk.classify({0.999999999, 0.0}), Membership::kAmbiguous);
  EXPECT_TRUE(disk.contains({0.99, 0.0}));
  EXPECT_FALSE(disk.contains({0.75, 0.75}));
}

TEST(Domain, CentroidOfConvexCurvesIsInside) {
  for (const AnalyticCurve& c : {unit_circle(), ellipse(2.0, 1.0), circle({5.0, 5.0}, 1.0), ellipse(0.1, 3.0)}) {
    const Domain d(c);
    Point2 centroid{0.0, 0.0};
    for (Point2 p : d.polyline()) centroid = centroid + p;
    centroid = (1.0 / static_cast<double>(d.polyline().size())) * centroid;
    EXPECT_TRUE(d.contains(centroid));
  }
}

TEST(Domain, AgreesWithAnalyticMembershipForEllipse) {
  const Domain d(ellipse(2.0, 1.0));
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    for (int j = 0; j < 100; ++j) {
      const Point2 p{-2.2 + 4.4 * (i + 0.5) / 200.0, -1.1 + 2.2 * (j + 0.5) / 100.0};
      const double level = p.x * p.x / 4.0 + p.y * p.y;
      if (std::abs(level - 1.0) < 1e-3) continue;  // polyline chord error region
      EXPECT_EQ(d.contains(p), level < 1.0) << p.x << "," << p.y;
      ++checked;
    }
  }
  EXPECT_GT(checked, 19000);
}

TEST(Domain, BoundingBoxes) {
  const auto check = [](const Domain& d, double xmin, double xmax, double ymin, double ymax) {
    const Box& b = d.bounding_box();
    const double tol = 1e-5 * std::max(xmax - xmin, ymax - ymin);
    EXPECT_NEAR(b.xmin, xmin, tol);
    EXPECT_NEAR(b.xmax, xmax, tol);
    EXPECT_NEAR(b.ymin, ymin, tol);
    EXPECT_NEAR(b.ymax, ymax, tol);
    EXPECT_LE(b.xmin, xmin);
    EXPECT_GE(b.xmax, xmax);
  };
  check(Domain(unit_circle()), -1, 1, -1, 1);
  check(Domain(ellipse(2.0, 1.0)), -2, 2, -1, 1);
  check(Domain(circle({5.0, 5.0}, 1.0)), 4, 6, 4, 6);
}

TEST(Domain, StarShape) {
  const Domain d(star3());
  // polar radius 1 + 0.25 cos 3t: 1.25 along t = 0, 0.75 along t = pi/3.
  EXPECT_TRUE(d.contains({1.2, 0.0}));
  EXPECT_FALSE(d.contains({1.3, 0.0}));
  EXPECT_TRUE(d.contains({0.7 * std::cos(kPi / 3), 0.7 * std::sin(kPi / 3)}));
  EXPECT_FALSE(d.contains({0.8 * std::cos(kPi / 3), 0.8 * std::sin(kPi / 3)}));
  EXPECT_NEAR(d.diameter(), 2.0, 0.3);
}

}  // namespace
}  // namespace kansa
