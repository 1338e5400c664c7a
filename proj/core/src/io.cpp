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

#include "kansa/io.hpp"

#include <ostream>

#include <fmt/format.h>

namespace kansa {
namespace {

void add_missing(Metadata& meta, const std::string& key, std::string value) {
  for (const auto& entry : meta) {
    if (entry.first == key) return;
  }
  meta.emplace_back(key, std::move(value));
}

}  // namespace

std::string format_real(double v) { return fmt::format("{:.16e}", v); }

void write_metadata(std::ostream& os, const Metadata& meta) {
  if (meta.empty()) return;
  os << '#';
  for (const auto& [key, value] : meta) os << ' ' << key << '=' << value;
  os << '\n';
}

void write_matrix_csv(std::ostream& os, const DenseMatrix& a, const Metadata& meta) {
  write_metadata(os, meta);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) os << ',';
      os << format_real(a(i, j));
    }
    os << '\n';
  }
}

void write_solution_csv(std::ostream& os, const KansaSolution& sol, Metadata meta) {
  const SolveDiagnostics& d = sol.diagnostics;
  if (sol.seed) add_missing(meta, "seed", std::to_string(*sol.seed));
  add_missing(meta, "nu", std::to_string(sol.kernel.nu()));
  meta.emplace_back("n", std::to_string(sol.set.n()));
  meta.emplace_back("m", std::to_string(sol.set.m()));
  meta.emplace_back("det_sign", std::to_string(d.det.sign));
  meta.emplace_back("log_abs_det", format_real(d.det.log_abs));
  meta.emplace_back("sigma_min", format_real(d.sigma.sigma_min));
  meta.emplace_back("sigma_max", format_real(d.sigma.sigma_max));
  meta.emplace_back("residual", format_real(d.residual));
  write_metadata(os, meta);
  os << "kind,x,y,t,coefficient\n";
  for (std::size_t j = 0; j < sol.set.n(); ++j) {
    const Point2 p = sol.set.interior()[j];
    os << "interior," << format_real(p.x) << ',' << format_real(p.y) << ",," << format_real(sol.c[j]) << '\n';
  }
  for (std::size_t k = 0; k < sol.set.m(); ++k) {
    const Point2 q = sol.set.boundary()[k];
    os << "boundary," << format_real(q.x) << ',' << format_real(q.y) << ',' << format_real(sol.set.abscissas()[k])
       << ',' << format_real(sol.d[k]) << '\n';
  }
}

void write_trials_csv(std::ostream& os, const StudyReport& report, const Metadata& meta, bool timing) {
  write_metadata(os, meta);
  os << "trial,seed,N,n,m,det_sign,log_abs_det,sigma_min,sigma_max,ratio,flagged";
  os << (timing ? ",wall_seconds\n" : "\n");
  for (const TrialRecord& r : report.records) {
    os << r.trial << ',' << r.seed << ',' << r.N << ',' << r.n << ',' << r.m << ',' << r.det_sign << ','
       << format_real(r.log_abs_det) << ',' << format_real(r.sigma_min) << ',' << format_real(r.sigma_max) << ','
       << format_real(r.ratio) << ',' << (r.flagged ? 1 : 0);
    if (timing) os << ',' << format_real(r.wall_seconds);
    os << '\n';
  }
}

void write_study_summary_csv(std::ostream& os, const StudyReport& report, const Metadata& meta) {
  write_metadata(os, meta);
  os << "N,trials,min_ratio,median_ratio,flagged\n";
  for (const StudySummaryRow& r : report.per_n) {
    os << r.N << ',' << r.trials << ',' << format_real(r.min_ratio) << ',' << format_real(r.median_ratio) << ','
       << r.flagged << '\n';
  }
}

void write_probe_csv(std::ostream& os, const ProbeReport& report, const Metadata& meta) {
  write_metadata(os, meta);
  os << "config,delta,r,det,closed_form,max_entry_sq\n";
  for (const ProbeRow& r : report.rows) {
    os << r.config << ',' << format_real(r.delta) << ',' << format_real(r.r) << ',' << format_real(r.det) << ','
       << format_real(r.closed_form) << ',' << format_real(r.max_entry_sq) << '\n';
  }
}

void write_convergence_csv(std::ostream& os, const ConvergenceReport& report, const Metadata& meta) {
  write_metadata(os, meta);
  os << "N,seed,max_err,rms_err,logdet,smin,smax,cond,flagged\n";
  for (const ConvergenceRow& r : report.rows) {
    os << r.N << ',' << r.seed << ',' << format_real(r.max_err) << ',' << format_real(r.rms_err) << ','
       << format_real(r.log_abs_det) << ',' << format_real(r.sigma_min) << ',' << format_real(r.sigma_max) << ','
       << format_real(r.cond) << ',' << (r.flagged ? 1 : 0) << '\n';
  }
}

void write_convergence_medians_csv(std::ostream& os, const ConvergenceReport& report, const Metadata& meta) {
  write_metadata(os, meta);
  os << "N,solved,flagged,median_max_err,median_rms_err\n";
  for (const ConvergenceMedian& r : report.medians) {
    os << r.N << ',' << r.solved << ',' << r.flagged << ',' << format_real(r.median_max_err) << ','
       << format_real(r.median_rms_err) << '\n';
  }
}

}  // namespace kansa
