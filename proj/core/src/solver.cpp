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

#include "kansa/solver.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "kansa/errors.hpp"

namespace kansa {

KansaSolution solve_collocation(const Domain& domain, const TpsKernel& kernel, const CollocationSet& set,
                                const RhsSpec& rhs) {
  const KansaMatrix k = assemble(kernel, domain, set);
  const std::vector<double> b = assemble_rhs(rhs, set);
  const LuFactorization lu = lu_factor(k.values);

  SolveDiagnostics diag;
  diag.det = log_abs_det(lu);
  diag.sigma = sigma_extremes(k.values, lu);
  if (diag.singular()) {
    throw SingularSystemError(
        fmt::format("collocation matrix is numerically singular (sigma_min/sigma_max = {:.3e})", diag.sigma.ratio()),
        {diag.det.sign, diag.det.log_abs, diag.sigma.sigma_min, diag.sigma.sigma_max});
  }

  const std::vector<double> x = solve(lu, b);
  std::vector<double> r = k.values.multiply(x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  const double bn = norm_inf(b);
  diag.residual = bn > 0.0 ? norm_inf(r) / bn : norm_inf(r);
  diag.residual_scale = k.values.norm_inf() * norm_inf(x);

  KansaSolution sol{{x.begin(), x.begin() + static_cast<std::ptrdiff_t>(set.n())},
                    {x.begin() + static_cast<std::ptrdiff_t>(set.n()), x.end()},
                    set,
                    kernel,
                    diag,
                    std::nullopt};
  return sol;
}

CollocationSet sample_collocation_set(const Domain& domain, std::size_t n, std::size_t m, SeededGenerator& gen,
                                      const SamplingLaw& law) {
  std::vector<Point2> existing;
  std::vector<Point2> interior;
  std::vector<double> abscissas;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 p = draw_interior(domain, law, existing, gen);
    interior.push_back(p);
    existing.push_back(p);
  }
  for (std::size_t h = 0; h < m; ++h) {
    const double t = draw_boundary(domain, law, existing, gen);
    abscissas.push_back(t);
    existing.push_back(domain.boundary().eval(t));
  }
  return CollocationSet(domain.boundary(), std::move(interior), std::move(abscissas));
}

KansaSolution solve_poisson(const Domain& domain, const TpsKernel& kernel, std::size_t n, std::size_t m,
                            const RhsSpec& rhs, std::uint64_t seed, const SamplingLaw& law) {
  if (n + m < 2) throw InputError("a collocation solve needs n + m >= 2");
  if (kernel.nu() < 2) throw UnsupportedKernelError("collocation needs nu >= 2");
  SeededGenerator gen(seed);
  KansaSolution sol = solve_collocation(domain, kernel, sample_collocation_set(domain, n, m, gen, law), rhs);
  sol.seed = seed;
  return sol;
}

double evaluate(const KansaSolution& sol, Point2 p) {
  double u = 0.0;
  for (std::size_t j = 0; j < sol.c.size(); ++j) u += sol.c[j] * sol.kernel.phi_pair(p, sol.set.interior()[j]);
  for (std::size_t k = 0; k < sol.d.size(); ++k) u += sol.d[k] * sol.kernel.phi_pair(p, sol.set.boundary()[k]);
  return u;
}

double evaluate_laplacian(const KansaSolution& sol, Point2 p) {
  double u = 0.0;
  for (std::size_t j = 0; j < sol.c.size(); ++j) u += sol.c[j] * sol.kernel.lap_phi_pair(p, sol.set.interior()[j]);
  for (std::size_t k = 0; k < sol.d.size(); ++k) u += sol.d[k] * sol.kernel.lap_phi_pair(p, sol.set.boundary()[k]);
  return u;
}

std::vector<std::string> manufactured_case_names() { return {"quadratic", "harmonic-exp", "trig"}; }

ManufacturedCase manufactured_case(std::string_view name) {
  using std::numbers::pi;
  if (name == "quadratic") {
    return {"quadratic", [](Point2 p) { return p.x * p.x + p.y * p.y; }, [](Point2) { return 4.0; }};
  }
  if (name == "harmonic-exp") {
    return {"harmonic-exp", [](Point2 p) { return std::exp(p.x) * std::sin(p.y); }, [](Point2) { return 0.0; }};
  }
  if (name == "trig") {
    return {"trig", [](Point2 p) { return std::sin(pi * p.x) * std::sin(pi * p.y); },
            [](Point2 p) { return -2.0 * pi * pi * std::sin(pi * p.x) * std::sin(pi * p.y); }};
  }
  throw ConfigError("unknown manufactured case '" + std::string(name) + "' (expected quadratic, harmonic-exp or trig)");
}

GridError grid_error(const KansaSolution& sol, const Domain& domain, const ScalarField& exact,
                     std::size_t resolution) {
  const Box& box = domain.bounding_box();
  GridError err;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < resolution; ++i) {
    for (std::size_t j = 0; j < resolution; ++j) {
      const Point2 p{box.xmin + (static_cast<double>(i) + 0.5) * box.width() / static_cast<double>(resolution),
                     box.ymin + (static_cast<double>(j) + 0.5) * box.height() / static_cast<double>(resolution)};
      if (!domain.contains(p)) continue;
      const double e = std::abs(evaluate(sol, p) - exact(p));
      err.max = std::max(err.max, e);
      sum_sq += e * e;
      ++err.points;
    }
  }
  if (err.points == 0) throw InputError("error grid has no interior nodes");
  err.rms = std::sqrt(sum_sq / static_cast<double>(err.points));
  return err;
}

}  // namespace kansa
