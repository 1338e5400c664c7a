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

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "kansa/experiments.hpp"
#include "kansa/linalg.hpp"
#include "kansa/solver.hpp"

namespace kansa {

/// Ordered key=value pairs written as one '#'-prefixed line at the top of
/// every CSV output.
using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Full-precision scientific notation (17 significant digits).
std::string format_real(double v);

void write_metadata(std::ostream& os, const Metadata& meta);

/// Row-major, one matrix row per line.
void write_matrix_csv(std::ostream& os, const DenseMatrix& a, const Metadata& meta = {});

/// Metadata with seed, nu, n, m and diagnostics, then rows
/// kind,x,y,t,coefficient (t blank for interior centers).
void write_solution_csv(std::ostream& os, const KansaSolution& sol, Metadata meta = {});

/// trial,seed,N,n,m,det_sign,log_abs_det,sigma_min,sigma_max,ratio,flagged
/// (plus wall_seconds when `timing` is set).
void write_trials_csv(std::ostream& os, const StudyReport& report, const Metadata& meta, bool timing = false);

/// N,trials,min_ratio,median_ratio,flagged
void write_study_summary_csv(std::ostream& os, const StudyReport& report, const Metadata& meta);

/// config,delta,r,det,closed_form,max_entry_sq
void write_probe_csv(std::ostream& os, const ProbeReport& report, const Metadata& meta);

/// N,seed,max_err,rms_err,logdet,smin,smax,cond,flagged
void write_convergence_csv(std::ostream& os, const ConvergenceReport& report, const Metadata& meta);

/// N,solved,flagged,median_max_err,median_rms_err
void write_convergence_medians_csv(std::ostream& os, const ConvergenceReport& report, const Metadata& meta);

}  // namespace kansa
