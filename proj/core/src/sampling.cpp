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

#include "kansa/sampling.hpp"

#include <numbers>

#include "kansa/errors.hpp"

namespace kansa {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

[[noreturn]] void exhausted(const char* what) {
  throw DegenerateDomainError(std::string(what) + ": rejection budget of 10^6 consecutive proposals exhausted");
}

double propose_abscissa(SeededGenerator& gen) { return kTwoPi * gen.uniform(); }

Point2 propose_in_box(const Box& box, SeededGenerator& gen) {
  const double x = gen.uniform(box.xmin, box.xmax);
  const double y = gen.uniform(box.ymin, box.ymax);
  return {x, y};
}

void count(SamplerStats* stats, bool accepted) {
  if (!stats) return;
  ++stats->proposals;
  if (accepted) ++stats->accepted;
}

// Accepts with probability value / bound; consumes a draw only when value < bound.
bool thin(double value, double bound, SeededGenerator& gen) {
  if (value >= bound) return true;
  return gen.uniform() * bound < value;
}

bool is_distinct(Point2 p, std::span<const Point2> existing, double min_distance) {
  for (const Point2& q : existing) {
    if (distance(p, q) <= min_distance) return false;
  }
  return true;
}

}  // namespace

Point2 sample_interior_uniform(const Domain& domain, SeededGenerator& gen, SamplerStats* stats) {
  for (std::size_t i = 0; i < kRejectionBudget; ++i) {
    const Point2 p = propose_in_box(domain.bounding_box(), gen);
    const bool ok = domain.contains(p);
    count(stats, ok);
    if (ok) return p;
  }
  exhausted("interior sampler");
}

Point2 sample_interior_density(const Domain& domain, const DensitySpec& density, SeededGenerator& gen,
                               SamplerStats* stats) {
  for (std::size_t i = 0; i < kRejectionBudget; ++i) {
    const Point2 p = propose_in_box(domain.bounding_box(), gen);
    const bool ok = domain.contains(p) && thin(density.evaluate({p.x, p.y, 0.0}), density.bound(), gen);
    count(stats, ok);
    if (ok) return p;
  }
  exhausted("interior density sampler");
}

double sample_boundary_arclength(const AnalyticCurve& curve, SeededGenerator& gen, SamplerStats* stats) {
  const double bound = curve.speed_bound();
  for (std::size_t i = 0; i < kRejectionBudget; ++i) {
    const double t = propose_abscissa(gen);
    const bool ok = gen.uniform() * bound < curve.speed(t);
    count(stats, ok);
    if (ok) return t;
  }
  exhausted("arclength sampler");
}

double sample_boundary_density(const AnalyticCurve& curve, const DensitySpec& density, SeededGenerator& gen,
                               SamplerStats* stats) {
  for (std::size_t i = 0; i < kRejectionBudget; ++i) {
    const double t = propose_abscissa(gen);
    const Point2 q = curve.eval(t);
    const bool ok = thin(density.evaluate({q.x, q.y, t}), density.bound(), gen);
    count(stats, ok);
    if (ok) return t;
  }
  exhausted("boundary density sampler");
}

Point2 draw_interior(const Domain& domain, const SamplingLaw& law, std::span<const Point2> existing,
                     SeededGenerator& gen) {
  const double min_distance = kDistinctnessFactor * domain.diameter();
  for (std::size_t i = 0; i < kRejectionBudget; ++i) {
    const Point2 p = law.interior ? sample_interior_density(domain, *law.interior, gen)
                                  : sample_interior_uniform(domain, gen);
    if (is_distinct(p, existing, min_distance)) return p;
  }
  exhausted("interior draw");
}

double draw_boundary(const Domain& domain, const SamplingLaw& law, std::span<const Point2> existing,
                     SeededGenerator& gen) {
  const double min_distance = kDistinctnessFactor * domain.diameter();
  const AnalyticCurve& curve = domain.boundary();
  for (std::size_t i = 0; i < kRejectionBudget; ++i) {
    const double t = law.boundary ? sample_boundary_density(curve, *law.boundary, gen)
                                  : sample_boundary_arclength(curve, gen);
    if (is_distinct(curve.eval(t), existing, min_distance)) return t;
  }
  exhausted("boundary draw");
}

}  // namespace kansa
