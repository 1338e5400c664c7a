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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kansa/assembly.hpp"
#include "kansa/geometry.hpp"
#include "kansa/kernel.hpp"
#include "kansa/sampling.hpp"
#include "kansa/solver.hpp"

namespace kansa {

enum class GrowthRule { kAlternate, kRandom, kInteriorFirst, kBoundaryFirst };

/// Order in which a collocation set grows, one point per step, to (n, m).
struct GrowthPolicy {
  std::size_t n_target = 0;
  std::size_t m_target = 0;
  GrowthRule rule = GrowthRule::kAlternate;
  /// Probability of an interior step under GrowthRule::kRandom.
  double p_interior = 0.5;

  std::size_t total() const { return n_target + m_target; }
};

/// Parses alternate | random | interior-first | boundary-first.
GrowthRule parse_growth_rule(std::string_view name);
std::string growth_rule_name(GrowthRule rule);

/// Diagnostics of the collocation matrix after one growth step.
struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t N = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  int det_sign = 0;
  double log_abs_det = 0.0;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  double ratio = 0.0;
  bool flagged = false;
  double wall_seconds = 0.0;
};

struct TrialSetup {
  const Domain& domain;
  TpsKernel kernel;
  GrowthPolicy policy;
  SamplingLaw law;
};

/// Grows a random set with extend_interior / extend_boundary and records the
/// factorization diagnostics at every N >= 2. A step is flagged when
/// sigma_min / sigma_max <= 1e-13.
std::vector<TrialRecord> unisolvence_trial(const TrialSetup& setup, std::uint64_t seed, std::size_t trial = 0);

/// As unisolvence_trial, also returning the final set.
std::vector<TrialRecord> unisolvence_trial(const TrialSetup& setup, std::uint64_t seed, std::size_t trial,
                                           CollocationSet* final_set);

struct StudySummaryRow {
  std::size_t N = 0;
  std::size_t trials = 0;
  double min_ratio = 0.0;
  double median_ratio = 0.0;
  std::size_t flagged = 0;
};

struct StudyReport {
  std::uint64_t master_seed = 0;
  /// Ordered by trial index, then N.
  std::vector<TrialRecord> records;
  std::vector<StudySummaryRow> per_n;
  std::size_t flagged_steps = 0;
  std::vector<std::uint64_t> flagged_seeds;
};

/// Runs `trials` independent trials, trial i seeded with
/// SeededGenerator::child_seed(master_seed, i), over `threads` workers. The
/// report does not depend on the thread count.
StudyReport unisolvence_study(const TrialSetup& setup, std::uint64_t master_seed, std::size_t trials,
                              std::size_t threads = 1);

struct ProbeRow {
  std::string config;  // "interior-pair" or "interior-boundary"
  double delta = 0.0;  // offset added to the probed radius
  double r = 0.0;      // measured center distance
  double det = 0.0;
  double closed_form = 0.0;
  double max_entry_sq = 0.0;
};

struct ProbeReport {
  int nu = 0;
  double critical_radius = 0.0;
  std::vector<ProbeRow> rows;
};

/// N = 2 configurations on the unit disk placed on (and near) the zero
/// circles of the determinant: two interior points at distance r, and an
/// interior point at distance r from Q_1 = (1, 0). Rows for r = critical
/// radius, r + delta for delta in {1e-2, 1e-4, 1e-6}, and r = 1.
/// Throws UnsupportedKernelError for nu = 1.
ProbeReport singular_probe(const TpsKernel& kernel);

/// det(K_2) for two interior centers at distance r.
double interior_pair_det(const TpsKernel& kernel, double r);
/// det(K_2) for one interior and one boundary center at distance r.
double interior_boundary_det(const TpsKernel& kernel, double r);
/// det(K_2) for two boundary centers at distance r.
double boundary_pair_det(const TpsKernel& kernel, double r);

struct ConvergenceRow {
  std::size_t N = 0;
  std::uint64_t seed = 0;
  double max_err = 0.0;
  double rms_err = 0.0;
  double log_abs_det = 0.0;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  double cond = 0.0;
  bool flagged = false;
};

struct ConvergenceMedian {
  std::size_t N = 0;
  std::size_t solved = 0;
  std::size_t flagged = 0;
  double median_max_err = 0.0;
  double median_rms_err = 0.0;
};

struct ConvergenceSetup {
  const Domain& domain;
  TpsKernel kernel;
  ManufacturedCase manufactured;
  std::vector<std::size_t> ladder;
  std::size_t seeds = 20;
  /// m = round(boundary_fraction * N), n = N - m.
  double boundary_fraction = 0.4;
  std::size_t grid = 50;
  SamplingLaw law;
};

struct ConvergenceReport {
  std::uint64_t master_seed = 0;
  std::vector<ConvergenceRow> rows;
  std::vector<ConvergenceMedian> medians;
};

/// Solves the manufactured case for every (N, seed index s) with seed
/// child_seed(master_seed, s). Singular solves are kept as flagged rows and
/// left out of the medians.
ConvergenceReport convergence_study(const ConvergenceSetup& setup, std::uint64_t master_seed,
                                    std::size_t threads = 1);

double median(std::vector<double> values);

}  // namespace kansa
