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
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kansa/assembly.hpp"
#include "kansa/geometry.hpp"
#include "kansa/kernel.hpp"
#include "kansa/linalg.hpp"
#include "kansa/sampling.hpp"

namespace kansa {

struct SolveDiagnostics {
  DetValue det;
  SigmaExtremes sigma;
  /// |K x - b|_inf / |b|_inf (absolute when b = 0).
  double residual = 0.0;
  /// |K|_inf |x|_inf, the scale of the backward-error bound.
  double residual_scale = 0.0;

  double condition() const { return sigma.sigma_min > 0.0 ? sigma.sigma_max / sigma.sigma_min : std::numeric_limits<double>::infinity(); }
  bool singular() const { return numerically_singular(sigma); }
};

/// Coefficients of u_N(P) = sum_j c_j phi(|P - P_j|) + sum_k d_k phi(|P - Q_k|).
struct KansaSolution {
  std::vector<double> c;
  std::vector<double> d;
  CollocationSet set;
  TpsKernel kernel;
  SolveDiagnostics diagnostics;
  std::optional<std::uint64_t> seed;
};

/// Assembles, factors and solves on a given set. Throws SingularSystemError
/// (with diagnostics) when sigma_min / sigma_max <= 1e-13.
KansaSolution solve_collocation(const Domain& domain, const TpsKernel& kernel, const CollocationSet& set,
                                const RhsSpec& rhs);

/// Draws n interior then m boundary points from `law` with a generator seeded
/// by `seed`, then solves. Deterministic in (domain, kernel, n, m, rhs, seed, law).
KansaSolution solve_poisson(const Domain& domain, const TpsKernel& kernel, std::size_t n, std::size_t m,
                            const RhsSpec& rhs, std::uint64_t seed, const SamplingLaw& law = {});

/// Random collocation set: n interior draws followed by m boundary draws.
CollocationSet sample_collocation_set(const Domain& domain, std::size_t n, std::size_t m, SeededGenerator& gen,
                                      const SamplingLaw& law = {});

double evaluate(const KansaSolution& sol, Point2 p);
double evaluate_laplacian(const KansaSolution& sol, Point2 p);

/// Exact solution u* with f = lap u* and g = u* on the boundary.
struct ManufacturedCase {
  std::string name;
  ScalarField u;
  ScalarField f;

  RhsSpec rhs() const { return {f, u, name + ":f", name + ":g"}; }
};

/// Catalog: quadratic (x^2 + y^2, f = 4), harmonic-exp (e^x sin y, f = 0),
/// trig (sin(pi x) sin(pi y), f = -2 pi^2 u). Throws ConfigError for other names.
ManufacturedCase manufactured_case(std::string_view name);
std::vector<std::string> manufactured_case_names();

struct GridError {
  double max = 0.0;
  double rms = 0.0;
  std::size_t points = 0;
};

/// Error of u_N against u* on the interior nodes of a resolution x resolution
/// grid over the bounding box. Throws InputError if no node is inside.
GridError grid_error(const KansaSolution& sol, const Domain& domain, const ScalarField& exact,
                     std::size_t resolution);

}  // namespace kansa
