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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "kansa/assembly.hpp"
#include "kansa/density.hpp"
#include "kansa/experiments.hpp"
#include "kansa/sampling.hpp"
#include "kansa/solver.hpp"
#include "oracles.hpp"

namespace {

using namespace kansa;
namespace fs = std::filesystem;

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::size_t worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string fmt_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double relative_gap(double a, double b) { return std::abs(a - b) / std::abs(b); }

// 1. Numeric det(K_2) against the closed forms on random N = 2 sets.
Outcome base_case_determinants() {
  const Domain disk(unit_circle());
  double worst = 0.0;
  std::size_t configs = 0;
  for (int nu : {2, 3}) {
    const TpsKernel kernel(nu);
    SeededGenerator gen(1000 + nu);
    for (int i = 0; i < 200; ++i) {
      const Point2 p1 = sample_interior_uniform(disk, gen);
      const Point2 p2 = sample_interior_uniform(disk, gen);
      const double t1 = sample_boundary_arclength(disk.boundary(), gen);
      const double t2 = sample_boundary_arclength(disk.boundary(), gen);
      const Point2 q1 = disk.boundary().eval(t1);
      const Point2 q2 = disk.boundary().eval(t2);

      const double r_pp = std::hypot(p1.x - p2.x, p1.y - p2.y);
      const double r_qq = std::hypot(q1.x - q2.x, q1.y - q2.y);
      const double r_pq = std::hypot(p1.x - q1.x, p1.y - q1.y);
      const double lap_pp = oracle::tps_lap(nu, r_pp);
      const double psi_qq = oracle::tps_phi(nu, r_qq);
      const struct {
        CollocationSet set;
        double closed;
      } cases[] = {
          {CollocationSet(disk.boundary(), {p1, p2}, {}), -lap_pp * lap_pp},
          {CollocationSet(disk.boundary(), {}, {t1, t2}), -psi_qq * psi_qq},
          {CollocationSet(disk.boundary(), {p1}, {t1}), -oracle::tps_phi(nu, r_pq) * oracle::tps_lap(nu, r_pq)},
      };
      for (const auto& c : cases) {
        const double det = log_abs_det(lu_factor(assemble(kernel, disk, c.set).values)).value();
        worst = std::max(worst, relative_gap(det, c.closed));
        ++configs;
      }
    }
  }
  return {worst <= 1e-10, std::to_string(configs) + " sets, max relative gap " + fmt_sci(worst) + " (tol 1e-10)"};
}

// 2. Singular circle of two interior centers and the perturbation ladder.
Outcome singular_circle_probe() {
  const ProbeReport report = singular_probe(TpsKernel(2));
  double at_circle = -1.0;
  double bound = 0.0;
  std::vector<double> ladder;
  for (const ProbeRow& row : report.rows) {
    if (row.config != "interior-pair") continue;
    if (row.delta == 0.0) {
      at_circle = std::abs(row.det);
      bound = 1e-12 * row.max_entry_sq;
    } else if (row.delta == 1e-2 || row.delta == 1e-4 || row.delta == 1e-6) {
      ladder.push_back(std::abs(row.det));
    }
  }
  const bool decreasing = ladder.size() == 3 && ladder[0] > ladder[1] && ladder[1] > ladder[2];
  return {at_circle >= 0.0 && at_circle <= bound && decreasing,
          "|det| " + fmt_sci(at_circle) + " <= " + fmt_sci(bound) + ", ladder " + fmt_sci(ladder.at(0)) + " > " +
              fmt_sci(ladder.at(1)) + " > " + fmt_sci(ladder.at(2))};
}

// 3. Growth to N = 40 on three domains, no numerically singular step.
Outcome monte_carlo_uniform() {
  const struct {
    const char* name;
    AnalyticCurve curve;
  } domains[] = {{"disk", unit_circle()}, {"ellipse(2,1)", ellipse(2.0, 1.0)}, {"star3", star3()}};
  std::size_t flagged = 0;
  std::size_t steps = 0;
  double min_ratio = 1.0;
  std::uint64_t master = 2026;
  for (const auto& d : domains) {
    const Domain domain(d.curve);
    const TrialSetup setup{domain, TpsKernel(2), {20, 20, GrowthRule::kAlternate, 0.5}, {}};
    const StudyReport report = unisolvence_study(setup, master++, 500, worker_count());
    flagged += report.flagged_steps;
    steps += report.records.size();
    for (const auto& row : report.per_n) min_ratio = std::min(min_ratio, row.min_ratio);
  }
  return {flagged == 0, std::to_string(steps) + " steps, " + std::to_string(flagged) +
                            " flagged, min sigma ratio " + fmt_sci(min_ratio) + " (flag at 1e-13)"};
}

// 4. Same with non-uniform point laws.
Outcome monte_carlo_density() {
  const Domain disk(unit_circle());
  SamplingLaw law;
  law.interior = certify_interior(DensitySpec::gaussian_bump({0.0, 0.0}, 0.3), disk);
  law.boundary = certify_boundary(DensitySpec::parse("expr:1+cos(t)@2"), disk.boundary());
  const TrialSetup setup{disk, TpsKernel(2), {20, 20, GrowthRule::kAlternate, 0.5}, law};
  const StudyReport report = unisolvence_study(setup, 4242, 100, worker_count());
  double min_ratio = 1.0;
  for (const auto& row : report.per_n) min_ratio = std::min(min_ratio, row.min_ratio);
  return {report.flagged_steps == 0, std::to_string(report.records.size()) + " steps, " +
                                         std::to_string(report.flagged_steps) + " flagged, min sigma ratio " +
                                         fmt_sci(min_ratio)};
}

// 5. Five-point Laplacian against the closed form; zero at the critical radius.
Outcome kernel_correctness() {
  const double h = 1e-4;
  const Point2 a{0.1, 0.2};
  double worst = 0.0;
  double worst_root = 0.0;
  for (int nu : {1, 2, 3}) {
    const TpsKernel k(nu);
    for (int i = 0; i <= 2900; ++i) {
      const double r = 0.1 + 1e-3 * i;
      const double theta = 0.37 * i;
      const Point2 p = a + Point2{r * std::cos(theta), r * std::sin(theta)};
      const auto f = [&](Point2 q) { return k.phi_pair(q, a); };
      const double fd =
          (f(p + Point2{h, 0}) + f(p - Point2{h, 0}) + f(p + Point2{0, h}) + f(p - Point2{0, h}) - 4.0 * f(p)) /
          (h * h);
      const double rr = distance(p, a);
      const double scale = 4.0 * nu * std::pow(rr, 2 * nu - 2) * (nu * std::abs(std::log(rr)) + 1.0);
      worst = std::max(worst, std::abs(fd - k.lap_phi_pair(p, a)) / scale);
    }
    const double rc = k.critical_radius();
    worst_root = std::max(worst_root, std::abs(k.lap_phi(rc)) / (4.0 * nu * std::pow(rc, 2 * nu - 2)));
  }
  return {worst <= 1e-5 && worst_root <= 1e-14,
          "max scaled FD gap " + fmt_sci(worst) + " (tol 1e-5), scaled lap at root " + fmt_sci(worst_root) +
              " (tol 1e-14)"};
}

// 6. Chi-square goodness of fit for the boundary laws; disk acceptance rate.
Outcome sampler_statistics() {
  constexpr std::size_t bins = 20;
  constexpr std::size_t draws = 100'000;
  const double critical = oracle::chi_square_critical(bins - 1, 0.001);
  const std::vector<double> flat(bins, 1.0 / bins);

  const auto draw = [&](const std::function<double(SeededGenerator&)>& sampler, std::uint64_t seed) {
    SeededGenerator gen(seed);
    std::vector<double> ts(draws);
    for (double& t : ts) t = sampler(gen);
    return oracle::angle_histogram(ts, bins);
  };

  const AnalyticCurve circle = unit_circle();
  const AnalyticCurve ell = ellipse(2.0, 1.0);
  const DensitySpec w = certify_boundary(DensitySpec::parse("expr:1+cos(t)@2"), circle);
  const double chi_circle = oracle::chi_square_statistic(
      draw([&](SeededGenerator& g) { return sample_boundary_arclength(circle, g); }, 61), flat);
  const double chi_ellipse = oracle::chi_square_statistic(
      draw([&](SeededGenerator& g) { return sample_boundary_arclength(ell, g); }, 62),
      oracle::bin_masses([](double t) { return std::sqrt(4 * std::sin(t) * std::sin(t) + std::cos(t) * std::cos(t)); },
                         bins));
  std::vector<double> cosine(bins);
  for (std::size_t i = 0; i < bins; ++i) {
    const double lo = 2.0 * kPi * i / bins;
    const double hi = 2.0 * kPi * (i + 1) / bins;
    cosine[i] = (hi - lo + std::sin(hi) - std::sin(lo)) / (2.0 * kPi);
  }
  const double chi_cosine = oracle::chi_square_statistic(
      draw([&](SeededGenerator& g) { return sample_boundary_density(circle, w, g); }, 63), cosine);

  const Domain disk(circle);
  SeededGenerator gen(64);
  SamplerStats stats;
  while (stats.proposals < draws) sample_interior_uniform(disk, gen, &stats);
  const double rate = stats.acceptance_rate();

  const bool pass = chi_circle < critical && chi_ellipse < critical && chi_cosine < critical &&
                    std::abs(rate - kPi / 4.0) <= 0.005;
  return {pass, "chi2 circle " + fmt_sci(chi_circle) + ", ellipse " + fmt_sci(chi_ellipse) + ", 1+cos t " +
                    fmt_sci(chi_cosine) + " (critical " + fmt_sci(critical) + "), acceptance " + fmt_sci(rate)};
}

// 7. Exact representability: planted ansatz coefficients are recovered.
Outcome recovery_oracle() {
  const Domain disk(unit_circle());
  const TpsKernel kernel(2);
  double worst = 0.0;
  double worst_cond = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SeededGenerator gen(seed);
    const CollocationSet set = sample_collocation_set(disk, 20, 15, gen);
    std::vector<double> coef(set.size());
    for (double& c : coef) c = gen.uniform(-1.0, 1.0);
    const std::vector<Point2> centers = set.centers();
    RhsSpec rhs;
    rhs.f = [&](Point2 q) {
      double s = 0.0;
      for (std::size_t i = 0; i < centers.size(); ++i) s += coef[i] * kernel.lap_phi_pair(centers[i], q);
      return s;
    };
    rhs.g = [&](Point2 q) {
      double s = 0.0;
      for (std::size_t i = 0; i < centers.size(); ++i) s += coef[i] * kernel.phi_pair(centers[i], q);
      return s;
    };
    const KansaSolution sol = solve_collocation(disk, kernel, set, rhs);
    std::vector<double> got = sol.c;
    got.insert(got.end(), sol.d.begin(), sol.d.end());
    double gap = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < coef.size(); ++i) {
      gap = std::max(gap, std::abs(got[i] - coef[i]));
      scale = std::max(scale, std::abs(coef[i]));
    }
    worst = std::max(worst, gap / scale);
    worst_cond = std::max(worst_cond, sol.diagnostics.condition());
  }
  return {worst <= 1e-6, "max relative coefficient error " + fmt_sci(worst) + " (tol 1e-6), max cond " +
                             fmt_sci(worst_cond)};
}

// 8. Median max error over 20 seeds drops from N = 40 to N = 160.
Outcome convergence_sanity() {
  const Domain disk(unit_circle());
  bool pass = true;
  std::string detail;
  for (const char* name : {"quadratic", "harmonic-exp"}) {
    const ConvergenceSetup setup{disk, TpsKernel(2), manufactured_case(name), {40, 160}, 20, 0.4, 50, {}};
    const ConvergenceReport report = convergence_study(setup, 8080, worker_count());
    const double at40 = report.medians.at(0).median_max_err;
    const double at160 = report.medians.at(1).median_max_err;
    pass = pass && at160 < at40 && report.medians.at(0).solved > 0 && report.medians.at(1).solved > 0;
    detail += std::string(detail.empty() ? "" : "; ") + name + " " + fmt_sci(at40) + " -> " + fmt_sci(at160);
  }
  return {pass, detail};
}

// 9. Zero diagonal, symmetry relations, bordered growth equals fresh assembly.
Outcome structural_invariants() {
  const AnalyticCurve curves[] = {unit_circle(), ellipse(2.0, 1.0), star3()};
  std::size_t matrices = 0;
  std::size_t violations = 0;
  for (std::uint64_t seq = 0; seq < 100; ++seq) {
    const Domain domain(curves[seq % 3]);
    const TpsKernel kernel(2 + static_cast<int>(seq % 2));
    SeededGenerator gen(SeededGenerator::child_seed(99, seq));
    CollocationSet set;
    KansaMatrix k;
    for (int step = 0; step < 30; ++step) {
      const std::vector<Point2> existing = set.centers();
      if (gen.uniform() < 0.5) {
        std::tie(k, set) = extend_interior(k, kernel, domain, set, draw_interior(domain, {}, existing, gen));
      } else {
        std::tie(k, set) = extend_boundary(k, kernel, domain, set, draw_boundary(domain, {}, existing, gen));
      }
      if (set.size() < 2) continue;
      ++matrices;
      if (!(k == assemble(kernel, domain, set))) ++violations;
      const DenseMatrix& a = k.values;
      const std::size_t n = set.n();
      for (std::size_t i = 0; i < set.size(); ++i) {
        if (a(i, i) != 0.0) ++violations;
        for (std::size_t j = 0; j < set.size(); ++j) {
          const bool same_block = (i < n) == (j < n);
          if (same_block && a(i, j) != a(j, i)) ++violations;
          if (i < n && j >= n && kernel.lap_phi_pair(set.center(j), set.center(i)) != a(i, j)) ++violations;
        }
      }
    }
  }
  return {violations == 0,
          std::to_string(matrices) + " matrices from 100 growth sequences, " + std::to_string(violations) +
              " violations"};
}

// 10. Every subcommand twice with a fixed seed; compare all output files.
Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / "kansa_acceptance_determinism";
  fs::remove_all(root);
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"solve", "--n 30 --m 20 --export-matrix"},
      {"unisolvence", "--trials 10"},
      {"probe", "--nu 2"},
      {"convergence", "--ladder 20,40 --seeds 4 --grid 20"},
      {"sample", "--domain star3 --n 40 --m 20"},
  };
  const auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  std::size_t files = 0;
  std::vector<std::string> mismatched;
  for (const auto& [command, flags] : runs) {
    const fs::path out = root / command;
    const fs::path log = root / (command + ".log");
    const std::string line = std::string(KANSA_EXECUTABLE) + " " + command + " " + flags + " --seed 7 --out " +
                             out.string() + " > " + log.string();
    fs::create_directories(root);
    // Run twice into the same directory and compare against a snapshot of
    // the first run's files and summary line.
    if (std::system(line.c_str()) != 0) mismatched.push_back(command + " (exit)");
    std::vector<std::pair<fs::path, std::string>> snapshot;
    for (const auto& entry : fs::directory_iterator(out)) snapshot.emplace_back(entry.path(), slurp(entry.path()));
    snapshot.emplace_back(log, slurp(log));
    if (std::system(line.c_str()) != 0) mismatched.push_back(command + " (exit)");
    for (const auto& [path, bytes] : snapshot) {
      ++files;
      if (bytes != slurp(path)) mismatched.push_back(command + "/" + path.filename().string());
    }
  }
  fs::remove_all(root);
  std::string detail = std::to_string(files) + " files compared across 5 subcommands";
  for (const auto& m : mismatched) detail += ", differs: " + m;
  return {mismatched.empty() && files > 0, detail};
}

}  // namespace

int main() {
  const struct {
    const char* title;
    Outcome (*run)();
    double limit_seconds;
  } criteria[] = {
      {"base-case determinant oracles", base_case_determinants, 1.0},
      {"singular circle probe", singular_circle_probe, 1.0},
      {"Monte Carlo unisolvence, uniform laws", monte_carlo_uniform, 300.0},
      {"Monte Carlo unisolvence, density laws", monte_carlo_density, 120.0},
      {"kernel correctness", kernel_correctness, 0.0},
      {"sampler statistics", sampler_statistics, 0.0},
      {"recovery oracle", recovery_oracle, 10.0},
      {"convergence sanity", convergence_sanity, 180.0},
      {"structural invariants", structural_invariants, 0.0},
      {"determinism", determinism, 0.0},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = fmt_sci(seconds) + " s";
    if (c.limit_seconds > 0.0) {
      timing += " (limit " + fmt_sci(c.limit_seconds) + " s)";
      if (seconds >= c.limit_seconds) o.pass = false;
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s  %2d %-40s %s [%s]\n", o.pass ? "PASS" : "FAIL", index, c.title, o.detail.c_str(),
                timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
