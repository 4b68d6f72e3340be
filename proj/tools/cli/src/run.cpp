#include "dunkl/cli/run.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>

#include <fmt/format.h>
#include <json.hpp>

#include "dunkl/errors.hpp"
#include "dunkl/oracle/checks.hpp"
#include "dunkl/oracle/operators.hpp"
#include "dunkl/oracle/propagator.hpp"

namespace dunkl::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr double kPinneyTolerance = 1e-6;
constexpr double kSchrodingerTolerance = 1e-4;
constexpr double kInvariantTolerance = 1e-4;
constexpr double kGram1dTolerance = 1e-8;
constexpr double kGram3dTolerance = 1e-6;
constexpr double kAngularTolerance = 1e-8;
constexpr double kDriftTolerance = 1e-4;
constexpr double kCommutatorSpacing = 0.005;

std::string num(double v) { return fmt::format("{:.17g}", v); }

class CsvWriter {
 public:
  CsvWriter(const fs::path& path, std::string_view header) : out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) throw std::runtime_error("cannot write " + path.string());
    out_ << header << '\n';
  }

  void row(std::initializer_list<double> values) {
    bool first = true;
    for (const double v : values) {
      if (!first) out_ << ',';
      out_ << num(v);
      first = false;
    }
    out_ << '\n';
  }

 private:
  std::ofstream out_;
};

void write_json(const fs::path& path, const json& doc) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

dynamics::PinneyTrajectory solve(const RunConfig& config) {
  return dynamics::solve_ermakov_pinney(config.scenario.build(), config.scenario.pinney_options());
}

oracle::SpatialGrid1D grid_1d(const RunConfig& config, const Dunkl1DModel& model, Parity s, int n_max,
                              const dynamics::PinneyTrajectory& trajectory) {
  const auto& g = config.grid;
  if (g.x_max && g.n_points) return oracle::SpatialGrid1D(*g.x_max, *g.n_points);
  if (g.x_max) return oracle::SpatialGrid1D::with_spacing(g.spacing, *g.x_max);
  const auto automatic = oracle::auto_grid(model, s, n_max, trajectory, g.spacing);
  if (g.n_points) return oracle::SpatialGrid1D(automatic.x_max(), *g.n_points);
  return automatic;
}

// Interior samples t_end k/6, k = 1..5, clear of the finite-difference stencil.
std::vector<double> verify_times(const dynamics::PinneyTrajectory& trajectory) {
  std::vector<double> out;
  for (int k = 1; k <= 5; ++k) out.push_back(trajectory.t_end() * k / 6.0);
  return out;
}

json context_json(const oracle::ResidualReport& report) {
  json ctx = json::object();
  for (const auto& [key, value] : report.context) {
    std::visit([&](const auto& v) { ctx[key] = v; }, value);
  }
  return ctx;
}

json report_json(const oracle::ResidualReport& report) {
  json out;
  out["name"] = report.name;
  out["value"] = std::isfinite(report.value) ? json(report.value) : json(nullptr);
  out["tolerance"] = report.tolerance;
  out["passed"] = report.passed;
  out["context"] = context_json(report);
  return out;
}

void add_commutators(std::vector<oracle::ResidualReport>& reports, const Dunkl1DModel& model, Parity s) {
  const auto grid = oracle::SpatialGrid1D::with_spacing(kCommutatorSpacing, 8.0);
  const auto bump = oracle::gaussian_bump(grid, 3.0, 4.0);
  reports.push_back(oracle::commutator_check(oracle::Commutator::t1_t2, bump, model, s, 1e-3));
  reports.push_back(oracle::commutator_check(oracle::Commutator::t2_t3, bump, model, s, 1e-4));
  reports.push_back(oracle::commutator_check(oracle::Commutator::t1_t3, bump, model, s, 1e-3));
}

// The radial equation of a 3D state is the even 1D sector equation with nu = sigma.
Dunkl1DModel radial_sector_model(const Dunkl3DModel& model, const StateSpec3D& spec) {
  return Dunkl1DModel(separation_constants(model, spec).sigma + 0.5, model.hbar());
}

void tag(oracle::ResidualReport& report, const std::string& label) {
  report.context.insert(report.context.begin(), {"label", label});
}

void verify_1d(const RunConfig& config, const dynamics::PinneyTrajectory& trajectory,
               std::vector<oracle::ResidualReport>& reports) {
  const auto model = config.model_1d();
  const auto times = verify_times(trajectory);
  for (const auto& state : config.states) {
    const auto spec = std::get<StateSpec1D>(state);
    const auto grid = grid_1d(config, model, spec.s, spec.n, trajectory);
    auto schrodinger =
        oracle::schrodinger_residual_1d(model, spec, trajectory, times, grid, 1e-3, kSchrodingerTolerance);
    tag(schrodinger, state_label(state));
    reports.push_back(std::move(schrodinger));
    auto invariant = oracle::invariant_eigen_residual_1d(model, spec, trajectory, times, grid, kInvariantTolerance);
    tag(invariant, state_label(state));
    reports.push_back(std::move(invariant));
  }

  const auto mid = trajectory.at(0.5 * trajectory.t_end());
  for (const Parity s : {Parity::even, Parity::odd}) {
    int n_max = -1;
    for (const auto& state : config.states) {
      const auto spec = std::get<StateSpec1D>(state);
      if (spec.s == s) n_max = std::max(n_max, spec.n);
    }
    if (n_max < 0) continue;
    const auto gram = oracle::gram_matrix_1d(model, s, n_max, mid);
    reports.push_back(oracle::ResidualReport::make("gram-orthonormality", oracle::identity_deviation(gram),
                                                   kGram1dTolerance,
                                                   {{"parity", std::string(1, parity_char(s))},
                                                    {"n_max", static_cast<std::int64_t>(n_max)},
                                                    {"t", mid.t}}));
  }

  add_commutators(reports, model, std::get<StateSpec1D>(config.states.front()).s);

  if (config.propagator) {
    const auto s = std::get<StateSpec1D>(config.states.front()).s;
    int n_max = 0;
    for (const auto& state : config.states) n_max = std::max(n_max, std::get<StateSpec1D>(state).n);
    const auto grid = grid_1d(config, model, s, n_max, trajectory);
    auto initial = oracle::DiscreteField::zeros(grid);
    const double scale = 1.0 / std::sqrt(static_cast<double>(config.states.size()));
    for (const auto& state : config.states) {
      initial = initial + oracle::Complex(scale) *
                              oracle::sample_state(model, std::get<StateSpec1D>(state), grid, trajectory.at(0.0));
    }
    const auto& p = *config.propagator;
    const auto series = oracle::crank_nicolson_propagate(initial, model, s, trajectory.scenario(), p.dt, p.n_steps,
                                                         std::max<std::size_t>(1, p.n_steps / 100));
    auto drift = oracle::invariant_expectation_drift(series, model, s, trajectory, kDriftTolerance);
    const double n0 = oracle::weighted_inner_product(series.front().field, series.front().field).real();
    double norm_drift = 0.0;
    for (const auto& snap : series) {
      norm_drift =
          std::max(norm_drift, std::abs(oracle::weighted_inner_product(snap.field, snap.field).real() / n0 - 1.0));
    }
    drift.context.emplace_back("norm_drift", norm_drift);
    drift.context.emplace_back("dt", p.dt);
    drift.context.emplace_back("n_steps", static_cast<std::int64_t>(p.n_steps));
    reports.push_back(std::move(drift));
  }
}

void verify_3d(const RunConfig& config, const dynamics::PinneyTrajectory& trajectory,
               std::vector<oracle::ResidualReport>& reports) {
  const auto model = config.model_3d();
  const auto times = verify_times(trajectory);
  std::vector<StateSpec3D> specs;
  for (const auto& state : config.states) {
    const auto spec = std::get<StateSpec3D>(state);
    specs.push_back(spec);
    const auto radial = radial_sector_model(model, spec);
    const StateSpec1D sector{spec.n_r, Parity::even};
    // In 3d, grid.n_points sets the eval sampling density only; the radial
    // check always resolves the state at grid.spacing.
    auto radial_config = config;
    radial_config.grid.n_points.reset();
    const auto grid = grid_1d(radial_config, radial, Parity::even, spec.n_r, trajectory);
    for (auto report : {oracle::schrodinger_residual_1d(radial, sector, trajectory, times, grid, 1e-3,
                                                        kSchrodingerTolerance),
                        oracle::invariant_eigen_residual_1d(radial, sector, trajectory, times, grid,
                                                            kInvariantTolerance)}) {
      tag(report, state_label(state));
      report.context.emplace_back("reduction", "radial sector nu = sigma");
      reports.push_back(std::move(report));
    }
    for (const auto which : {oracle::AngularFactor::azimuthal, oracle::AngularFactor::polar}) {
      auto report = oracle::angular_residual(model, spec, which, 64, kAngularTolerance);
      tag(report, state_label(state));
      reports.push_back(std::move(report));
    }
  }
  const auto mid = trajectory.at(0.5 * trajectory.t_end());
  const auto gram = oracle::gram_matrix_3d(model, specs, mid);
  reports.push_back(oracle::ResidualReport::make("gram-orthonormality", oracle::identity_deviation(gram),
                                                 kGram3dTolerance,
                                                 {{"states", static_cast<std::int64_t>(specs.size())}, {"t", mid.t}}));
  add_commutators(reports, radial_sector_model(model, specs.front()), Parity::even);
}

}  // namespace

void run_solve_pinney(const RunConfig& config, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  const auto trajectory = solve(config);
  const auto& scenario = trajectory.scenario();
  CsvWriter csv(out_dir / "pinney.csv", "t,rho,rho_dot,theta,M,omega");
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    const auto p = trajectory.node(i);
    csv.row({p.t, p.rho, p.rho_dot, p.theta, p.mass, scenario.omega(p.t)});
  }
}

void run_eval(const RunConfig& config, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  const auto trajectory = solve(config);
  const auto& samples = config.outputs.time_samples;
  json eigen = json::object();

  for (const auto& state : config.states) {
    const auto label = state_label(state);
    const auto file = file_label(state);
    json entry;
    json phases = json::array();
    if (const auto* spec = std::get_if<StateSpec1D>(&state)) {
      const auto model = config.model_1d();
      entry["eigenvalue"] = eigenvalue_1d(model, *spec);
      const auto grid = grid_1d(config, model, spec->s, spec->n, trajectory);
      for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto at = trajectory.at(samples[i]);
        phases.push_back(json{{"t", samples[i]}, {"eta", phase_1d(model, *spec, at)}});
        if (!config.outputs.csv) continue;
        CsvWriter csv(out_dir / fmt::format("state_{}_t{}.csv", file, i), "x,re,im,abs2");
        for (std::size_t j = 0; j < grid.size(); ++j) {
          const double x = grid.x(j);
          const auto psi = wavefunction_1d(model, *spec, x, at);
          csv.row({x, psi.value.real(), psi.value.imag(), psi.modulus_sq});
        }
      }
    } else {
      const auto& spec3 = std::get<StateSpec3D>(state);
      const auto model = config.model_3d();
      entry["eigenvalue"] = eigenvalue_3d(model, spec3);
      const auto rho = trajectory.rho();
      const double rho_max = *std::max_element(rho.begin(), rho.end());
      const double sigma = separation_constants(model, spec3).sigma;
      const double r_max = config.grid.x_max.value_or(oracle::auto_extent(rho_max, model.hbar(), spec3.n_r, sigma));
      const std::size_t n_r = config.grid.n_points.value_or(64);
      const std::size_t n_theta = config.grid.n_theta;
      const std::size_t n_phi = config.grid.n_phi;
      constexpr double pi = std::numbers::pi;
      for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto at = trajectory.at(samples[i]);
        phases.push_back(json{{"t", samples[i]}, {"eta", phase_3d(model, spec3, at)}});
        if (!config.outputs.csv) continue;
        CsvWriter csv(out_dir / fmt::format("state_{}_t{}.csv", file, i), "r,theta,phi,re,im,abs2");
        for (std::size_t a = 0; a < n_r; ++a) {
          const double r = (a + 0.5) * r_max / n_r;
          for (std::size_t b = 0; b < n_theta; ++b) {
            const double theta = (b + 0.5) * pi / n_theta;
            for (std::size_t c = 0; c < n_phi; ++c) {
              const double phi = (c + 0.5) * 2.0 * pi / n_phi;
              const auto psi = wavefunction_3d(model, spec3, r, theta, phi, at);
              csv.row({r, theta, phi, psi.real(), psi.imag(), std::norm(psi)});
            }
          }
        }
      }
    }
    entry["phases"] = std::move(phases);
    eigen[label] = std::move(entry);
  }
  if (config.outputs.json) write_json(out_dir / "eigenvalues.json", eigen);
}

VerifyOutcome run_verify(const RunConfig& config, const fs::path& out_dir, const VerifyHooks& hooks) {
  fs::create_directories(out_dir);
  const auto solved = solve(config);
  const auto trajectory = hooks.rho_scale == 1.0 ? solved : solved.with_scaled_rho(hooks.rho_scale);

  VerifyOutcome outcome;
  auto& reports = outcome.reports;
  reports.push_back(oracle::ResidualReport::make("pinney-residual", dynamics::pinney_residual(trajectory),
                                                 kPinneyTolerance,
                                                 {{"nodes", static_cast<std::int64_t>(trajectory.size())},
                                                  {"rho_scale", hooks.rho_scale}}));
  if (config.model.dimension == Dimension::one) {
    verify_1d(config, trajectory, reports);
  } else {
    verify_3d(config, trajectory, reports);
  }

  json doc = json::array();
  for (const auto& r : reports) {
    doc.push_back(report_json(r));
    outcome.all_passed = outcome.all_passed && r.passed;
  }
  write_json(out_dir / "verify.json", doc);
  return outcome;
}

void run_propagate(const RunConfig& config, const fs::path& out_dir) {
  if (config.model.dimension != Dimension::one) throw ConfigError("propagate: only 1d models can be propagated");
  if (!config.propagator) throw ConfigError("propagate: missing [propagator] section");
  fs::create_directories(out_dir);
  const auto trajectory = solve(config);
  const auto model = config.model_1d();
  const auto& p = *config.propagator;
  const auto s = std::get<StateSpec1D>(config.states.front()).s;
  int n_max = 0;
  for (const auto& state : config.states) n_max = std::max(n_max, std::get<StateSpec1D>(state).n);
  const auto grid = grid_1d(config, model, s, n_max, trajectory);

  const double scale = 1.0 / std::sqrt(static_cast<double>(config.states.size()));
  const auto exact = [&](double t) {
    auto field = oracle::DiscreteField::zeros(grid);
    const auto at = trajectory.at(t);
    for (const auto& state : config.states) {
      field = field + oracle::Complex(scale) * oracle::sample_state(model, std::get<StateSpec1D>(state), grid, at);
    }
    return field;
  };

  const auto initial = exact(0.0);
  const double n0 = oracle::weighted_inner_product(initial, initial).real();
  const double i0 = oracle::invariant_expectation(initial, model, s, trajectory.at(0.0));
  CsvWriter csv(out_dir / "fidelity.csv", "t,fidelity,norm_drift,invariant_drift");
  const std::size_t stride = std::max<std::size_t>(1, p.n_steps / 1000);
  oracle::crank_nicolson_propagate(
      initial, model, s, trajectory.scenario(), p.dt, p.n_steps, stride,
      [&](std::size_t, double t, const oracle::DiscreteField& field) {
        const double fid = oracle::fidelity(exact(t), field);
        const double norm_drift = std::abs(oracle::weighted_inner_product(field, field).real() / n0 - 1.0);
        const double inv = oracle::invariant_expectation(field, model, s, trajectory.at(t));
        csv.row({t, fid, norm_drift, std::abs(inv - i0) / std::abs(i0)});
      });
}

int run_command(std::string_view subcommand, const std::string& config_path, const std::optional<std::string>& out_dir,
                std::ostream& err, const VerifyHooks& hooks) {
  try {
    const auto config = load_config(config_path);
    const fs::path dir = out_dir.value_or(config.outputs.directory);
    if (subcommand == "solve-pinney") {
      run_solve_pinney(config, dir);
    } else if (subcommand == "eval") {
      run_eval(config, dir);
    } else if (subcommand == "verify") {
      const auto outcome = run_verify(config, dir, hooks);
      for (const auto& r : outcome.reports) {
        if (!r.passed) err << "verify: " << r.name << " failed: " << num(r.value) << " > " << num(r.tolerance) << '\n';
      }
      if (!outcome.all_passed) return kVerificationFailure;
    } else if (subcommand == "propagate") {
      run_propagate(config, dir);
    } else {
      err << "unknown subcommand '" << subcommand << "'\n";
      return kConfigError;
    }
    return kSuccess;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const DomainError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const SingularityError& e) {
    err << "numerical failure at t=" << num(e.time()) << ": " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const StiffnessError& e) {
    err << "numerical failure at t=" << num(e.time()) << ": " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoFailure;
  }
}

}  // namespace dunkl::cli
