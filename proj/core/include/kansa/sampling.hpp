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
#include <optional>
#include <span>

#include "kansa/density.hpp"
#include "kansa/geometry.hpp"
#include "kansa/random.hpp"

namespace kansa {

/// Consecutive rejections tolerated before a sampler gives up.
inline constexpr std::size_t kRejectionBudget = 1'000'000;

/// Optional proposal/acceptance counters, accumulated across calls.
struct SamplerStats {
  std::size_t proposals = 0;
  std::size_t accepted = 0;
  double acceptance_rate() const {
    return proposals == 0 ? 0.0 : static_cast<double>(accepted) / static_cast<double>(proposals);
  }
};

/// Uniform point strictly inside the domain, by rejection from the bounding
/// box. Throws DegenerateDomainError when the budget is exhausted.
Point2 sample_interior_uniform(const Domain& domain, SeededGenerator& gen, SamplerStats* stats = nullptr);

/// Point with density proportional to `density` on the domain. The acceptance
/// draw is skipped where the density reaches its bound, so the uniform
/// density reproduces sample_interior_uniform draw for draw.
Point2 sample_interior_density(const Domain& domain, const DensitySpec& density, SeededGenerator& gen,
                               SamplerStats* stats = nullptr);

/// Abscissa t in [0, 2pi) with density |gamma'(t)| / L, accepted with
/// probability |gamma'(t)| / speed_upper_bound.
double sample_boundary_arclength(const AnalyticCurve& curve, SeededGenerator& gen, SamplerStats* stats = nullptr);

/// Abscissa with density proportional to w(t) = `density`.
double sample_boundary_density(const AnalyticCurve& curve, const DensitySpec& density, SeededGenerator& gen,
                               SamplerStats* stats = nullptr);

/// Point laws for the two kinds of collocation points. An empty interior
/// density means uniform in the domain; an empty boundary density means the
/// arclength law. Densities must already be certified.
struct SamplingLaw {
  std::optional<DensitySpec> interior;
  std::optional<DensitySpec> boundary;
};

/// Draws from the law, resampling any point closer than
/// 1e-12 * diameter to a point of `existing`.
Point2 draw_interior(const Domain& domain, const SamplingLaw& law, std::span<const Point2> existing,
                     SeededGenerator& gen);
double draw_boundary(const Domain& domain, const SamplingLaw& law, std::span<const Point2> existing,
                     SeededGenerator& gen);

inline constexpr double kDistinctnessFactor = 1e-12;

}  // namespace kansa
