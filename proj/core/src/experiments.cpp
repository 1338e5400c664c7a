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

#include "kansa/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "kansa/errors.hpp"
#include "kansa/linalg.hpp"

namespace kansa {
namespace {

// Runs fn(i) for i in [0, count) over `threads` workers; rethrows the first
// exception after all workers have joined.
template <class Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

bool next_is_interior(const GrowthPolicy& policy, std::size_t n, std::size_t m, std::size_t step,
                      SeededGenerator& gen) {
  if (n >= policy.n_target) return false;
  if (m >= policy.m_target) return true;
  switch (policy.rule) {
    case GrowthRule::kAlternate:
      return step % 2 == 0;
    case GrowthRule::kRandom:
      return gen.uniform() < policy.p_interior;
    case GrowthRule::kInteriorFirst:
      return true;
    case GrowthRule::kBoundaryFirst:
      return false;
  }
  return true;
}

}  // namespace

GrowthRule parse_growth_rule(std::string_view name) {
  if (name == "alternate") return GrowthRule::kAlternate;
  if (name == "random") return GrowthRule::kRandom;
  if (name == "interior-first") return GrowthRule::kInteriorFirst;
  if (name == "boundary-first") return GrowthRule::kBoundaryFirst;
  throw ConfigError("unknown growth policy '" + std::string(name) +
                    "' (expected alternate, random, interior-first or boundary-first)");
}

std::string growth_rule_name(GrowthRule rule) {
  switch (rule) {
    case GrowthRule::kAlternate: return "alternate";
    case GrowthRule::kRandom: return "random";
    case GrowthRule::kInteriorFirst: return "interior-first";
    case GrowthRule::kBoundaryFirst: return "boundary-first";
  }
  return {};
}

double median(std::vector<double> values) {
  if (values.empty()) return std::nan("");
  std::sort(values.begin(), values.end());
  const std::size_t h = values.size() / 2;
  return values.size() % 2 == 1 ? values[h] : 0.5 * (values[h - 1] + values[h]);
}

std::vector<TrialRecord> unisolvence_trial(const TrialSetup& setup, std::uint64_t seed, std::size_t trial) {
  return unisolvence_trial(setup, seed, trial, nullptr);
}

std::vector<TrialRecord> unisolvence_trial(const TrialSetup& setup, std::uint64_t seed, std::size_t trial,
                                           CollocationSet* final_set) {
  const GrowthPolicy& policy = setup.policy;
  if (setup.kernel.nu() < 2) throw UnsupportedKernelError("unisolvence trials need nu >= 2");
  if (policy.total() < 2) throw InputError("unisolvence trials need a target N >= 2");

  SeededGenerator gen(seed);
  CollocationSet set;
  KansaMatrix k;
  std::vector<Point2> existing;
  std::vector<TrialRecord> records;
  records.reserve(policy.total() - 1);

  for (std::size_t step = 0; step < policy.total(); ++step) {
    const auto start = std::chrono::steady_clock::now();
    if (next_is_interior(policy, set.n(), set.m(), step, gen)) {
      const Point2 p = draw_interior(setup.domain, setup.law, existing, gen);
      std::tie(k, set) = extend_interior(k, setup.kernel, setup.domain, set, p);
      existing.push_back(p);
    } else {
      const double t = draw_boundary(setup.domain, setup.law, existing, gen);
      std::tie(k, set) = extend_boundary(k, setup.kernel, setup.domain, set, t);
      existing.push_back(setup.domain.boundary().eval(t));
    }
    if (set.size() < 2) continue;

    const LuFactorization lu = lu_factor(k.values);
    const DetValue det = log_abs_det(lu);
    const SigmaExtremes sigma = sigma_extremes(k.values, lu);
    TrialRecord r;
    r.trial = trial;
    r.seed = seed;
    r.N = set.size();
    r.n = set.n();
    r.m = set.m();
    r.det_sign = det.sign;
    r.log_abs_det = det.log_abs;
    r.sigma_min = sigma.sigma_min;
    r.sigma_max = sigma.sigma_max;
    r.ratio = sigma.ratio();
    r.flagged = det.sign == 0 || numerically_singular(sigma);
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    records.push_back(r);
  }
  if (final_set) *final_set = set;
  return records;
}

StudyReport unisolvence_study(const TrialSetup& setup, std::uint64_t master_seed, std::size_t trials,
                              std::size_t threads) {
  std::vector<std::vector<TrialRecord>> per_trial(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    per_trial[i] = unisolvence_trial(setup, SeededGenerator::child_seed(master_seed, i), i);
  });

  StudyReport report;
  report.master_seed = master_seed;
  std::map<std::size_t, std::vector<double>> ratios;
  std::map<std::size_t, std::size_t> flagged;
  for (const auto& records : per_trial) {
    bool trial_flagged = false;
    for (const TrialRecord& r : records) {
      report.records.push_back(r);
      ratios[r.N].push_back(r.ratio);
      flagged[r.N] += r.flagged ? 1 : 0;
      if (r.flagged) {
        ++report.flagged_steps;
        trial_flagged = true;
      }
    }
    if (trial_flagged) report.flagged_seeds.push_back(records.front().seed);
  }
  for (auto& [N, values] : ratios) {
    StudySummaryRow row;
    row.N = N;
    row.trials = values.size();
    row.min_ratio = *std::min_element(values.begin(), values.end());
    row.median_ratio = median(values);
    row.flagged = flagged[N];
    report.per_n.push_back(row);
  }
  return report;
}

double interior_pair_det(const TpsKernel& kernel, double r) {
  const double lap = kernel.lap_phi(r);
  return -lap * lap;
}

double interior_boundary_det(const TpsKernel& kernel, double r) { return -kernel.phi(r) * kernel.lap_phi(r); }

double boundary_pair_det(const TpsKernel& kernel, double r) {
  const double phi = kernel.phi(r);
  return -phi * phi;
}

ProbeReport singular_probe(const TpsKernel& kernel) {
  if (kernel.nu() < 2) throw UnsupportedKernelError("singular probes assemble K_2 and need nu >= 2");
  const Domain disk(unit_circle());
  const double rc = kernel.critical_radius();

  ProbeReport report;
  report.nu = kernel.nu();
  report.critical_radius = rc;

  auto measure = [&](const std::string& config, double delta, const CollocationSet& set,
                     double (*closed)(const TpsKernel&, double)) {
    const KansaMatrix k = assemble(kernel, disk, set);
    ProbeRow row;
    row.config = config;
    row.delta = delta;
    row.r = distance(set.center(0), set.center(1));
    row.det = log_abs_det(lu_factor(k.values)).value();
    row.closed_form = closed(kernel, row.r);
    row.max_entry_sq = k.values.max_abs() * k.values.max_abs();
    report.rows.push_back(row);
  };

  const std::vector<double> deltas = {0.0, 1e-2, 1e-4, 1e-6};
  for (double delta : deltas) {
    const double r = rc + delta;
    measure("interior-pair", delta, CollocationSet(disk.boundary(), {{-0.5 * r, 0.0}, {0.5 * r, 0.0}}, {}),
            interior_pair_det);
  }
  measure("interior-pair", 1.0 - rc, CollocationSet(disk.boundary(), {{-0.5, 0.0}, {0.5, 0.0}}, {}),
          interior_pair_det);
  for (double delta : deltas) {
    const double r = rc + delta;
    measure("interior-boundary", delta, CollocationSet(disk.boundary(), {{1.0 - r, 0.0}}, {0.0}),
            interior_boundary_det);
  }
  return report;
}

ConvergenceReport convergence_study(const ConvergenceSetup& setup, std::uint64_t master_seed, std::size_t threads) {
  for (std::size_t i = 1; i < setup.ladder.size(); ++i) {
    if (setup.ladder[i] <= setup.ladder[i - 1]) throw ConfigError("convergence ladder must be increasing");
  }
  if (!(setup.boundary_fraction > 0.0 && setup.boundary_fraction < 1.0)) {
    throw ConfigError("boundary fraction must lie in (0, 1)");
  }
  const std::size_t jobs = setup.ladder.size() * setup.seeds;
  std::vector<ConvergenceRow> rows(jobs);
  const RhsSpec rhs = setup.manufactured.rhs();

  parallel_for(jobs, threads, [&](std::size_t job) {
    const std::size_t N = setup.ladder[job / setup.seeds];
    const std::uint64_t seed = SeededGenerator::child_seed(master_seed, job % setup.seeds);
    const auto m = static_cast<std::size_t>(std::lround(setup.boundary_fraction * static_cast<double>(N)));
    ConvergenceRow row;
    row.N = N;
    row.seed = seed;
    try {
      const KansaSolution sol = solve_poisson(setup.domain, setup.kernel, N - m, m, rhs, seed, setup.law);
      const GridError err = grid_error(sol, setup.domain, setup.manufactured.u, setup.grid);
      row.max_err = err.max;
      row.rms_err = err.rms;
      row.log_abs_det = sol.diagnostics.det.log_abs;
      row.sigma_min = sol.diagnostics.sigma.sigma_min;
      row.sigma_max = sol.diagnostics.sigma.sigma_max;
      row.cond = sol.diagnostics.condition();
    } catch (const SingularSystemError& e) {
      row.flagged = true;
      row.max_err = row.rms_err = std::nan("");
      row.log_abs_det = e.diagnostics().log_abs_det;
      row.sigma_min = e.diagnostics().sigma_min;
      row.sigma_max = e.diagnostics().sigma_max;
      row.cond = row.sigma_min > 0.0 ? row.sigma_max / row.sigma_min : std::numeric_limits<double>::infinity();
    }
    rows[job] = row;
  });

  ConvergenceReport report;
  report.master_seed = master_seed;
  report.rows = rows;
  for (std::size_t li = 0; li < setup.ladder.size(); ++li) {
    ConvergenceMedian med;
    med.N = setup.ladder[li];
    std::vector<double> max_errs;
    std::vector<double> rms_errs;
    for (std::size_t s = 0; s < setup.seeds; ++s) {
      const ConvergenceRow& row = rows[li * setup.seeds + s];
      if (row.flagged) {
        ++med.flagged;
        continue;
      }
      ++med.solved;
      max_errs.push_back(row.max_err);
      rms_errs.push_back(row.rms_err);
    }
    med.median_max_err = median(max_errs);
    med.median_rms_err = median(rms_errs);
    report.medians.push_back(med);
  }
  return report;
}

}  // namespace kansa
