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

#include "app.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "config.hpp"
#include "kansa/density.hpp"
#include "kansa/errors.hpp"
#include "kansa/experiments.hpp"
#include "kansa/expression.hpp"
#include "kansa/io.hpp"
#include "kansa/random.hpp"
#include "kansa/solver.hpp"

namespace kansa::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* kVersion = "0.1.0";

/// Command-line values; unset options leave the config untouched.
struct Overrides {
  std::optional<std::string> config;
  std::optional<std::string> domain;
  std::optional<int> nu;
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::optional<std::string> policy;
  std::optional<double> p_interior;
  std::optional<std::string> interior_density;
  std::optional<std::string> boundary_density;
  std::optional<std::string> manufactured;
  std::optional<std::string> f;
  std::optional<std::string> g;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> threads;
  std::optional<std::string> out;
  std::vector<std::size_t> ladder;
  std::optional<std::size_t> seeds;
  std::optional<std::size_t> grid;
  std::optional<double> boundary_fraction;
  bool timing = false;
  bool export_matrix = false;
};

void add_options(CLI::App* sub, Overrides& o) {
  sub->add_option("--config", o.config, "JSON config file");
  sub->add_option("--domain", o.domain, "disk | ellipse:a:b | star3 | <coefficients.json>");
  sub->add_option("--nu", o.nu, "thin-plate spline exponent (>= 2)");
  sub->add_option("--n", o.n, "number of interior centers");
  sub->add_option("--m", o.m, "number of boundary centers");
  sub->add_option("--policy", o.policy, "growth policy: alternate | random | interior-first | boundary-first");
  sub->add_option("--p-interior", o.p_interior, "interior step probability for --policy random");
  sub->add_option("--interior-density", o.interior_density, "uniform | gaussian-bump:cx:cy:w | expr:<text>[@bound]");
  sub->add_option("--boundary-density", o.boundary_density, "arclength | uniform | expr:<text>[@bound]");
  sub->add_option("--case", o.manufactured, "manufactured solution: quadratic | harmonic-exp | trig");
  sub->add_option("--f", o.f, "source term expression in x, y");
  sub->add_option("--g", o.g, "boundary datum expression in x, y");
  sub->add_option("--seed", o.seed, "master seed");
  sub->add_option("--trials", o.trials, "number of Monte Carlo trials");
  sub->add_option("--threads", o.threads, "worker threads");
  sub->add_option("--out", o.out, "output directory");
  sub->add_option("--ladder", o.ladder, "increasing list of N for the convergence study")->delimiter(',');
  sub->add_option("--seeds", o.seeds, "seeds per ladder rung");
  sub->add_option("--grid", o.grid, "error grid resolution");
  sub->add_option("--boundary-fraction", o.boundary_fraction, "m / N in the convergence study");
  sub->add_flag("--timing", o.timing, "add per-step wall time to the trial CSV");
  sub->add_flag("--export-matrix", o.export_matrix, "write the collocation matrix (solve)");
}

RunConfig resolve(const Overrides& o) {
  RunConfig cfg;
  if (o.config) cfg = load_config(*o.config);
  if (o.domain) cfg.domain = {*o.domain, std::nullopt};
  if (o.nu) cfg.nu = *o.nu;
  if (o.n) cfg.n = *o.n;
  if (o.m) cfg.m = *o.m;
  if (o.policy) cfg.policy = *o.policy;
  if (o.p_interior) cfg.p_interior = *o.p_interior;
  if (o.interior_density) cfg.interior_density = *o.interior_density;
  if (o.boundary_density) cfg.boundary_density = *o.boundary_density;
  if (o.manufactured) cfg.manufactured = *o.manufactured;
  if (o.f) cfg.f = *o.f;
  if (o.g) cfg.g = *o.g;
  if (o.seed) cfg.seed = *o.seed;
  if (o.trials) cfg.trials = *o.trials;
  if (o.threads) cfg.threads = *o.threads;
  if (o.out) cfg.out = *o.out;
  if (!o.ladder.empty()) cfg.ladder = o.ladder;
  if (o.seeds) cfg.seeds = *o.seeds;
  if (o.grid) cfg.grid = *o.grid;
  if (o.boundary_fraction) cfg.boundary_fraction = *o.boundary_fraction;
  if (o.timing) cfg.timing = true;
  if (o.export_matrix) cfg.export_matrix = true;
  return cfg;
}

void validate(const RunConfig& cfg, const std::string& command) {
  if (cfg.nu < 2) {
    throw ConfigError(fmt::format("nu must be >= 2 for Kansa collocation (got {}): the thin-plate Laplacian "
                                  "is undefined at the kernel center for nu = 1",
                                  cfg.nu));
  }
  if ((command == "solve" || command == "unisolvence") && cfg.n + cfg.m < 2) {
    throw ConfigError("n + m must be >= 2");
  }
  if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
  if (cfg.threads < 1) throw ConfigError("threads must be >= 1");
  if (!(cfg.p_interior >= 0.0 && cfg.p_interior <= 1.0)) throw ConfigError("p_interior must lie in [0, 1]");
  if (command == "convergence") {
    if (cfg.ladder.empty()) throw ConfigError("convergence ladder is empty");
    if (cfg.seeds < 1) throw ConfigError("seeds must be >= 1");
    if (cfg.grid < 2) throw ConfigError("grid must be >= 2");
  }
  if ((cfg.f || cfg.g) && command != "solve") throw ConfigError("--f/--g only apply to solve");
}

SamplingLaw make_law(const RunConfig& cfg, const Domain& domain) {
  SamplingLaw law;
  if (cfg.interior_density != "uniform") {
    law.interior = certify_interior(DensitySpec::parse(cfg.interior_density), domain);
  }
  if (cfg.boundary_density != "arclength") {
    law.boundary = certify_boundary(DensitySpec::parse(cfg.boundary_density), domain.boundary());
  }
  return law;
}

class Runner {
 public:
  Runner(RunConfig cfg, std::string command, std::ostream& out)
      : cfg_(std::move(cfg)), command_(std::move(command)), out_(out) {}

  int run() {
    validate(cfg_, command_);
    fs::create_directories(cfg_.out);
    {
      std::ofstream os(path("config.json"));
      os << to_json(cfg_).dump(2) << '\n';
    }
    if (command_ == "probe") return probe();

    const Domain domain(cfg_.domain.curve());
    const TpsKernel kernel(cfg_.nu);
    const SamplingLaw law = make_law(cfg_, domain);
    if (command_ == "solve") return solve(domain, kernel, law);
    if (command_ == "unisolvence") return unisolvence(domain, kernel, law);
    if (command_ == "convergence") return convergence(domain, kernel, law);
    return sample(domain, law);
  }

 private:
  std::string path(const std::string& file) const { return (fs::path(cfg_.out) / file).string(); }

  std::ofstream open(const std::string& file) const {
    std::ofstream os(path(file));
    if (!os) throw Error("cannot write '" + path(file) + "'");
    return os;
  }

  Metadata metadata() const {
    return {{"tool", "kansa"},
            {"version", kVersion},
            {"command", command_},
            {"generator", std::string(SeededGenerator::kName)},
            {"seed", std::to_string(cfg_.seed)},
            {"nu", std::to_string(cfg_.nu)},
            {"domain", cfg_.domain.label()},
            {"interior_density", cfg_.interior_density},
            {"boundary_density", cfg_.boundary_density}};
  }

  int solve(const Domain& domain, const TpsKernel& kernel, const SamplingLaw& law) {
    const ManufacturedCase mc = manufactured_case(cfg_.manufactured);
    RhsSpec rhs = mc.rhs();
    const bool exact_known = !cfg_.f && !cfg_.g;
    if (cfg_.f) {
      const Expression f = Expression::parse(*cfg_.f);
      rhs.f = [f](Point2 p) { return f(p.x, p.y); };
      rhs.f_name = *cfg_.f;
    }
    if (cfg_.g) {
      const Expression g = Expression::parse(*cfg_.g);
      rhs.g = [g](Point2 p) { return g(p.x, p.y); };
      rhs.g_name = *cfg_.g;
    }

    KansaSolution sol;
    try {
      sol = solve_poisson(domain, kernel, cfg_.n, cfg_.m, rhs, cfg_.seed, law);
    } catch (const SingularSystemError& e) {
      out_ << fmt::format("solve: numerically singular collocation matrix: {} (sigma_min={:.3e} sigma_max={:.3e})\n",
                          e.what(), e.diagnostics().sigma_min, e.diagnostics().sigma_max);
      return kSingular;
    }
    Metadata meta = metadata();
    meta.emplace_back("f", rhs.f_name);
    meta.emplace_back("g", rhs.g_name);
    {
      auto os = open("solution.csv");
      write_solution_csv(os, sol, meta);
    }
    if (cfg_.export_matrix) {
      auto os = open("matrix.csv");
      write_matrix_csv(os, assemble(kernel, domain, sol.set).values, metadata());
    }
    std::string line = fmt::format("solve: N={} n={} m={} log|det|={:.6g} cond={:.3e} residual={:.3e}",
                                   sol.set.size(), sol.set.n(), sol.set.m(), sol.diagnostics.det.log_abs,
                                   sol.diagnostics.condition(), sol.diagnostics.residual);
    if (exact_known) {
      const GridError err = grid_error(sol, domain, mc.u, cfg_.grid);
      line += fmt::format(" case={} max_err={:.3e} rms_err={:.3e}", mc.name, err.max, err.rms);
    }
    out_ << line << '\n';
    return kOk;
  }

  int unisolvence(const Domain& domain, const TpsKernel& kernel, const SamplingLaw& law) {
    GrowthPolicy policy{cfg_.n, cfg_.m, parse_growth_rule(cfg_.policy), cfg_.p_interior};
    const TrialSetup setup{domain, kernel, policy, law};
    const StudyReport report = unisolvence_study(setup, cfg_.seed, cfg_.trials, cfg_.threads);
    Metadata meta = metadata();
    meta.emplace_back("policy", cfg_.policy);
    meta.emplace_back("trials", std::to_string(cfg_.trials));
    {
      auto os = open("unisolvence_trials.csv");
      write_trials_csv(os, report, meta, cfg_.timing);
    }
    {
      auto os = open("unisolvence_summary.csv");
      write_study_summary_csv(os, report, meta);
    }
    double min_ratio = 1.0;
    for (const auto& row : report.per_n) min_ratio = std::min(min_ratio, row.min_ratio);
    out_ << fmt::format("unisolvence: trials={} target_N={} steps={} flagged={} min_sigma_ratio={:.3e}\n",
                        cfg_.trials, policy.total(), report.records.size(), report.flagged_steps, min_ratio);
    for (std::uint64_t s : report.flagged_seeds) out_ << "  flagged trial seed " << s << '\n';
    return kOk;
  }

  int probe() {
    const ProbeReport report = singular_probe(TpsKernel(cfg_.nu));
    {
      auto os = open("probe.csv");
      write_probe_csv(os, report, metadata());
    }
    std::string line = fmt::format("probe: nu={} critical_radius={:.10f}", report.nu, report.critical_radius);
    for (const ProbeRow& row : report.rows) {
      if (row.delta != 0.0) continue;
      line += fmt::format(" {}: |det|={:.3e} (1e-12*max|entry|^2={:.3e})", row.config, std::abs(row.det),
                          1e-12 * row.max_entry_sq);
    }
    out_ << line << '\n';
    return kOk;
  }

  int convergence(const Domain& domain, const TpsKernel& kernel, const SamplingLaw& law) {
    const ConvergenceSetup setup{domain,       kernel,    manufactured_case(cfg_.manufactured),
                                 cfg_.ladder,  cfg_.seeds, cfg_.boundary_fraction,
                                 cfg_.grid,    law};
    const ConvergenceReport report = convergence_study(setup, cfg_.seed, cfg_.threads);
    Metadata meta = metadata();
    meta.emplace_back("case", cfg_.manufactured);
    {
      auto os = open("convergence.csv");
      write_convergence_csv(os, report, meta);
    }
    {
      auto os = open("convergence_medians.csv");
      write_convergence_medians_csv(os, report, meta);
    }
    std::string line = fmt::format("convergence: case={}", cfg_.manufactured);
    for (const auto& med : report.medians) {
      line += fmt::format(" N={}:median_max_err={:.3e}", med.N, med.median_max_err);
    }
    out_ << line << '\n';
    return kOk;
  }

  int sample(const Domain& domain, const SamplingLaw& law) {
    SeededGenerator gen(cfg_.seed);
    const CollocationSet set = sample_collocation_set(domain, cfg_.n, cfg_.m, gen, law);
    {
      auto os = open("samples.csv");
      write_metadata(os, metadata());
      os << "kind,x,y,t\n";
      for (const Point2& p : set.interior()) {
        os << "interior," << format_real(p.x) << ',' << format_real(p.y) << ",\n";
      }
      for (std::size_t h = 0; h < set.m(); ++h) {
        const Point2 q = set.boundary()[h];
        os << "boundary," << format_real(q.x) << ',' << format_real(q.y) << ',' << format_real(set.abscissas()[h])
           << '\n';
      }
    }
    out_ << fmt::format("sample: n={} m={} domain={} arclength={:.10f}\n", set.n(), set.m(), cfg_.domain.label(),
                        domain.arclength());
    return kOk;
  }

  RunConfig cfg_;
  std::string command_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kansa collocation with thin-plate splines: solver and unisolvence experiments", "kansa"};
  app.require_subcommand(1);
  Overrides overrides;
  const char* commands[][2] = {
      {"solve", "solve the Poisson problem on random collocation points"},
      {"unisolvence", "Monte Carlo growth trials tracking det and singular values of K_N"},
      {"probe", "determinants on the singular circles of the N = 2 configurations"},
      {"convergence", "manufactured-solution error study over a ladder of N"},
      {"sample", "write a random collocation set"},
  };
  for (const auto& c : commands) add_options(app.add_subcommand(c[0], c[1]), overrides);

  std::vector<const char*> argv{"kansa"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return Runner(resolve(overrides), command, out).run();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
  } catch (const CurveError& e) {
    err << "config error: " << e.what() << '\n';
  } catch (const DensityError& e) {
    err << "config error: " << e.what() << '\n';
  } catch (const ExpressionError& e) {
    err << "config error: " << e.what() << '\n';
  } catch (const UnsupportedKernelError& e) {
    err << "config error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kConfigError;
}

}  // namespace kansa::cli
